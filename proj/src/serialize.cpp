#include "asymfun/serialize.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "asymfun/errors.hpp"

namespace asymfun {
namespace {

void expect_format(const json& j, const char* format) {
  if (!j.is_object() || !j.contains("format") || j["format"] != format) {
    throw ParseError(std::string("expected a JSON object with \"format\": \"") + format + "\"");
  }
}

template <class T>
T field(const json& j, const char* key) {
  if (!j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad field \"") + key + "\": " + e.what());
  }
}

// Non-finite doubles have no JSON encoding; they are written as strings.
json number(double x) {
  if (std::isfinite(x)) return x;
  if (std::isnan(x)) return "nan";
  return x > 0 ? "inf" : "-inf";
}

std::vector<cplx> coefficients_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw ParseError("coefficients must be a non-empty array");
  std::vector<cplx> out;
  for (const auto& c : j) out.push_back(complex_from_json(c));
  return out;
}

json coefficients_to_json(const std::vector<cplx>& cs) {
  json arr = json::array();
  for (cplx c : cs) arr.push_back(complex_to_json(c));
  return arr;
}

json power_series_to_json(const PowerSeries& ps) {
  json j;
  j["kind"] = ps.is_polynomial() ? "polynomial" : "series";
  j["coefficients"] = coefficients_to_json(ps.coefficients());
  if (!ps.is_polynomial()) j["tail_bound_radius"] = ps.tail_bound_radius();
  return j;
}

PowerSeries power_series_from_json(const json& j) {
  const auto kind = field<std::string>(j, "kind");
  auto coeffs = coefficients_from_json(j.contains("coefficients") ? j["coefficients"] : json());
  try {
    if (kind == "polynomial") return PowerSeries::polynomial(std::move(coeffs));
    if (kind == "series") return PowerSeries::series(std::move(coeffs), field<double>(j, "tail_bound_radius"));
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
  throw ParseError("target kind must be polynomial or series, got \"" + kind + "\"");
}

}  // namespace

json complex_to_json(cplx z) { return json::array({number(z.real()), number(z.imag())}); }

cplx complex_from_json(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
    return {j[0].get<double>(), j[1].get<double>()};
  }
  throw ParseError("complex numbers are written as [re, im]");
}

json to_json(const PathSystem& sys) {
  json j;
  j["format"] = kPathSystemFormat;
  json paths = json::array();
  for (const auto& p : sys.paths) {
    json pj;
    json verts = json::array();
    for (cplx v : p.vertices) verts.push_back(complex_to_json(v));
    pj["vertices"] = verts;
    pj["terminal_direction"] = std::arg(p.terminal_direction);
    paths.push_back(pj);
  }
  j["paths"] = paths;
  j["labels"] = sys.labels;
  return j;
}

PathSystem pathsystem_from_json(const json& j) {
  expect_format(j, kPathSystemFormat);
  if (!j.contains("paths") || !j["paths"].is_array()) throw ParseError("pathsystem: \"paths\" must be an array");
  PathSystem sys;
  for (const auto& pj : j["paths"]) {
    SegmentalPath p;
    p.vertices.clear();
    if (!pj.contains("vertices") || !pj["vertices"].is_array()) {
      throw ParseError("pathsystem: each path needs a \"vertices\" array");
    }
    for (const auto& v : pj["vertices"]) p.vertices.push_back(complex_from_json(v));
    p.terminal_direction = std::polar(1.0, field<double>(pj, "terminal_direction"));
    sys.paths.push_back(std::move(p));
  }
  if (j.contains("labels")) {
    sys.labels = field<std::vector<std::string>>(j, "labels");
  } else {
    for (std::size_t k = 0; k < sys.paths.size(); ++k) sys.labels.push_back("a" + std::to_string(k + 1));
  }
  try {
    sys.validate();
  } catch (const DomainError& e) {
    throw ParseError(std::string("pathsystem: ") + e.what());
  }
  return sys;
}

json to_json(const EntireSpec& spec) {
  json j;
  j["format"] = kFuncSpecFormat;
  const auto& fn = spec.function();
  if (const auto* ps = std::get_if<PowerSeries>(&fn)) {
    const json body = power_series_to_json(*ps);
    for (auto it = body.begin(); it != body.end(); ++it) j[it.key()] = it.value();
  } else if (const auto* cf = std::get_if<ConstructedF>(&fn)) {
    j["kind"] = "constructed";
    j["n"] = cf->n();
    j["tol"] = cf->tol();
    json targets = json::array();
    for (const auto& t : cf->targets()) targets.push_back(power_series_to_json(t));
    j["targets"] = targets;
  } else {
    const auto& c = std::get<ClassicDCA>(fn);
    j["kind"] = "classic";
    j["n"] = c.n;
    j["series_cutoff_radius"] = c.series_cutoff_radius;
    j["term_cap"] = c.term_cap;
    j["tol"] = spec.tol();
  }
  if (auto order = spec.declared_order()) {
    j["declared_order"] = *order;
  } else {
    j["declared_order"] = nullptr;
  }
  return j;
}

EntireSpec funcspec_from_json(const json& j) {
  expect_format(j, kFuncSpecFormat);
  const auto kind = field<std::string>(j, "kind");
  std::optional<EntireSpec> spec;
  try {
    if (kind == "polynomial" || kind == "series") {
      spec = EntireSpec::from_power_series(power_series_from_json(j));
    } else if (kind == "constructed") {
      const int n = field<int>(j, "n");
      if (!j.contains("targets") || !j["targets"].is_array()) throw ParseError("funcspec: \"targets\" must be an array");
      std::vector<PowerSeries> targets;
      for (const auto& t : j["targets"]) targets.push_back(power_series_from_json(t));
      const double tol = j.contains("tol") ? field<double>(j, "tol") : 1e-12;
      spec = EntireSpec::constructed(ConstructedF(n, std::move(targets), tol));
    } else if (kind == "classic") {
      ClassicDCA c;
      c.n = field<int>(j, "n");
      if (j.contains("series_cutoff_radius")) c.series_cutoff_radius = field<double>(j, "series_cutoff_radius");
      if (j.contains("term_cap")) c.term_cap = field<int>(j, "term_cap");
      const double tol = j.contains("tol") ? field<double>(j, "tol") : 1e-12;
      spec = EntireSpec::classic(c, tol);
    } else {
      throw ParseError("funcspec: unknown kind \"" + kind + "\"");
    }
  } catch (const DomainError& e) {
    throw ParseError(std::string("funcspec: ") + e.what());
  }
  if (j.contains("declared_order")) {
    if (j["declared_order"].is_null()) {
      spec->set_declared_order(std::nullopt);
    } else {
      spec->set_declared_order(field<double>(j, "declared_order"));
    }
  }
  return *spec;
}

json to_json(const GrowthSample& s) {
  json j;
  j["r"] = s.r;
  j["log_max_mod"] = number(s.log_max_mod);
  j["argmax_theta"] = s.argmax_theta;
  j["domain_id"] = s.domain_id < 0 ? json("whole") : json(s.domain_id);
  j["samples_used"] = s.samples_used;
  return j;
}

json to_json(const OrderFit& f) {
  json j;
  j["rho_hat"] = f.rho_hat;
  j["intercept"] = f.intercept;
  j["offset"] = f.offset;
  j["r_range"] = {f.r_range.first, f.r_range.second};
  j["residual_rms"] = f.residual_rms;
  j["loglog_slope"] = f.loglog_slope;
  j["samples_used"] = f.samples_used;
  j["deweighted"] = f.deweighted;
  return j;
}

json to_json(const AngularSlice& s) {
  json arcs = json::array();
  for (const auto& [a, b] : s.arcs) arcs.push_back({a, b});
  return {{"t", s.t}, {"phi", s.phi}, {"arcs", arcs}};
}

json to_json(const CarlemanReport& r) {
  return {{"j", r.j},         {"R1", r.R1},
          {"R", r.R},         {"integral_I", r.integral_I},
          {"omega_bound", r.omega_bound}, {"logM_lower", number(r.logM_lower)},
          {"kappa", r.kappa}, {"kappa1", r.kappa1},
          {"kappa2", r.kappa2}};
}

json to_json(const SectorInequality& s) { return {{"lhs", s.lhs}, {"rhs", s.rhs}, {"holds", s.holds}}; }

json to_json(const WosEstimate& e) {
  json j = {{"omega_hat", e.omega_hat}, {"ci95_halfwidth", e.ci95_halfwidth},
            {"hits", e.hits},           {"n_walks", e.n_walks},
            {"truncated_walks", e.truncated_walks}, {"seed", e.seed}};
  j["warning"] = e.warning ? json(*e.warning) : json(nullptr);
  return j;
}

json to_json(const Theorem1Report& r) {
  json sectors = json::array();
  for (const auto& s : r.sectors) {
    json ratios = json::array();
    for (double x : s.ratio_by_radius) ratios.push_back(number(x));
    sectors.push_back({{"j", s.j},
                       {"hypothesis_max_ratio", number(s.hypothesis_max_ratio)},
                       {"ratio_by_radius", ratios},
                       {"hypothesis_ok", s.hypothesis_ok},
                       {"note", s.hypothesis_note}});
  }
  json radii = json::array();
  for (const auto& p : r.radii) {
    radii.push_back({{"r", p.r},
                     {"log_max_mod", number(p.log_max_mod)},
                     {"conclusion_ratio", number(p.conclusion_ratio)},
                     {"chain_lower", p.chain_lower},
                     {"pigeonhole_j", p.pigeonhole_j},
                     {"pigeonhole_integral", p.pigeonhole_integral},
                     {"pigeonhole_logM_lower", number(p.pigeonhole_logM_lower)},
                     {"pigeonhole_measured", number(p.pigeonhole_measured)},
                     {"carleman_consistent", p.carleman_consistent}});
  }
  return {{"n", r.n},
          {"R1", r.R1},
          {"kappa", r.kappa},
          {"hypothesis_ok", r.hypothesis_ok},
          {"conclusion_min", number(r.conclusion_min)},
          {"conclusion_min_is_finite_range_proxy", true},
          {"conclusion_positive", r.conclusion_positive},
          {"carleman_consistent", r.carleman_consistent},
          {"verdict", r.verdict},
          {"sectors", sectors},
          {"radii", radii}};
}

json make_manifest(const std::string& command, const json& config, const std::vector<std::string>& outputs) {
  return {{"format", kManifestFormat}, {"command", command}, {"config", config}, {"outputs", outputs}};
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

}  // namespace asymfun
