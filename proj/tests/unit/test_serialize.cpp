#include <cmath>
#include <fstream>

#include "asymfun/errors.hpp"
#include "asymfun/serialize.hpp"
#include "doctest.h"

using namespace asymfun;

TEST_CASE("pathsystem round trip") {
  auto sys = random_path_system(4, 17);
  const json j = to_json(sys);
  CHECK(j["format"] == "pathsystem/1");
  auto back = pathsystem_from_json(json::parse(j.dump()));
  REQUIRE(back.size() == sys.size());
  CHECK(back.labels == sys.labels);
  for (int k = 0; k < sys.size(); ++k) {
    CHECK(back.paths[k].vertices == sys.paths[k].vertices);
    CHECK(std::abs(back.paths[k].terminal_direction - sys.paths[k].terminal_direction) < 1e-15);
  }
  for (double t : {0.5, 3.0}) {
    CHECK(std::abs(angular_measure(back, 1, t).phi - angular_measure(sys, 1, t).phi) < 1e-12);
  }
}

TEST_CASE("pathsystem parse errors") {
  CHECK_THROWS_AS(pathsystem_from_json(json::parse(R"({"format":"pathsystem/2","paths":[]})")), ParseError);
  CHECK_THROWS_AS(pathsystem_from_json(json::parse(R"({"format":"pathsystem/1"})")), ParseError);
  CHECK_THROWS_AS(
      pathsystem_from_json(json::parse(R"({"format":"pathsystem/1","paths":[{"vertices":[[1,0]],"terminal_direction":0}]})")),
      ParseError);
  // Two identical rays overlap.
  CHECK_THROWS_AS(pathsystem_from_json(json::parse(
                      R"({"format":"pathsystem/1","paths":[{"vertices":[[0,0]],"terminal_direction":0},
                         {"vertices":[[0,0]],"terminal_direction":0}]})")),
                  ParseError);
  auto ok = pathsystem_from_json(json::parse(
      R"({"format":"pathsystem/1","paths":[{"vertices":[[0,0]],"terminal_direction":0},
         {"vertices":[[0,0],[0,1]],"terminal_direction":1.5707963267948966}]})"));
  CHECK(ok.labels == std::vector<std::string>{"a1", "a2"});
}

TEST_CASE("funcspec round trips") {
  std::vector<EntireSpec> specs = {
      EntireSpec::from_power_series(PowerSeries::polynomial({1.0, cplx(0.5, -2.0)})),
      EntireSpec::from_power_series(PowerSeries::series({1.0, 1.0, 0.5}, 0.1)),
      EntireSpec::constructed(ConstructedF(2, {PowerSeries::polynomial({1.0}), PowerSeries::polynomial({0.0, 1.0})}, 1e-11)),
      EntireSpec::classic(ClassicDCA{3, 10.0, 200, true}, 1e-10)};
  for (const auto& spec : specs) {
    const json j = to_json(spec);
    CHECK(j["format"] == "funcspec/1");
    auto back = funcspec_from_json(json::parse(j.dump()));
    CHECK(back.kind() == spec.kind());
    CHECK(back.declared_order() == spec.declared_order());
    CHECK(to_json(back) == j);
    const cplx z(0.05, 0.03);
    CHECK(std::abs(back.eval_log(z).to_complex() - spec.eval_log(z).to_complex()) < 1e-14);
  }
}

TEST_CASE("funcspec parse errors") {
  CHECK_THROWS_AS(funcspec_from_json(json::parse(R"({"format":"funcspec/1","kind":"weird"})")), ParseError);
  CHECK_THROWS_AS(funcspec_from_json(json::parse(R"({"format":"funcspec/1","kind":"polynomial","coefficients":[]})")),
                  ParseError);
  CHECK_THROWS_AS(funcspec_from_json(json::parse(
                      R"({"format":"funcspec/1","kind":"constructed","n":3,"targets":[{"kind":"polynomial","coefficients":[1]}]})")),
                  ParseError);
  CHECK_THROWS_AS(funcspec_from_json(json::parse(R"({"format":"funcspec/1","kind":"classic","n":"two"})")),
                  ParseError);
  CHECK_THROWS_AS(read_json_file("/nonexistent/file.json"), ParseError);
}

TEST_CASE("report encodings") {
  WosEstimate e;
  e.omega_hat = 0.25;
  e.n_walks = 4;
  e.hits = 1;
  e.seed = 7;
  const json j = to_json(e);
  CHECK(j["seed"] == 7);
  CHECK(j["warning"].is_null());
  GrowthSample s;
  s.log_max_mod = -std::numeric_limits<double>::infinity();
  CHECK(to_json(s)["log_max_mod"] == "-inf");
  CHECK(to_json(s)["domain_id"] == "whole");
  auto m = make_manifest("growth", json{{"tol", 1e-12}}, {"out.csv"});
  CHECK(m["format"] == "manifest/1");
  CHECK(m["config"]["tol"] == 1e-12);
}
