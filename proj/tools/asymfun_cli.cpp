// asymfun: command-line driver for the constructions, scans and checks.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
// 3 numerical nonconvergence.

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "asymfun/classic.hpp"
#include "asymfun/construct.hpp"
#include "asymfun/errors.hpp"
#include "asymfun/geometry.hpp"
#include "asymfun/growth.hpp"
#include "asymfun/serialize.hpp"
#include "asymfun/verify.hpp"
#include "asymfun/wos.hpp"

namespace {

using namespace asymfun;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNonconvergence = 3;

/// Bad flag value; reported with the flag name and mapped to exit 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t") - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(trim(item));
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

double parse_real(const std::string& s, const std::string& flag) {
  std::size_t used = 0;
  double x = 0.0;
  try {
    x = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size() || !std::isfinite(x)) {
    throw UsageError(flag + ": cannot parse number '" + s + "'");
  }
  return x;
}

// "re", "re+imi", "re-imi" or "imi".
cplx parse_complex(const std::string& text, const std::string& flag) {
  const std::string s = trim(text);
  if (s.empty()) throw UsageError(flag + ": empty number");
  if (s.back() != 'i') return parse_real(s, flag);
  const std::string body = s.substr(0, s.size() - 1);
  // The split point is the last sign that is not the leading sign or part of an exponent.
  std::size_t cut = std::string::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      cut = k;
      break;
    }
  }
  auto imag_part = [&](const std::string& t) {
    if (t.empty() || t == "+") return 1.0;
    if (t == "-") return -1.0;
    return parse_real(t, flag);
  };
  if (cut == std::string::npos) return {0.0, imag_part(body)};
  return {parse_real(body.substr(0, cut), flag), imag_part(body.substr(cut))};
}

// Inline power series: poly:c0,c1,... or series:@file (a funcspec/1
// file of kind polynomial or series).
PowerSeries parse_target(const std::string& text, const std::string& flag) {
  if (text.rfind("poly:", 0) == 0) {
    const std::string body = text.substr(5);
    if (trim(body).empty()) throw UsageError(flag + ": empty coefficient list in '" + text + "'");
    std::vector<cplx> coeffs;
    for (const auto& c : split(body, ',')) coeffs.push_back(parse_complex(c, flag));
    return PowerSeries::polynomial(std::move(coeffs));
  }
  if (text.rfind("series:@", 0) == 0) {
    const EntireSpec spec = funcspec_from_json(read_json_file(text.substr(8)));
    if (const auto* ps = std::get_if<PowerSeries>(&spec.function())) return *ps;
    throw UsageError(flag + ": " + text.substr(8) + " does not hold a power series");
  }
  throw UsageError(flag + ": expected poly:... or series:@file, got '" + text + "'");
}

std::vector<double> parse_radii(const std::string& text) {
  const std::string s = trim(text);
  if (s.empty()) throw UsageError("--radii: empty radius list");
  std::vector<double> out;
  if (s.find(':') != std::string::npos) {
    const auto parts = split(s, ':');
    if (parts.size() != 3) throw UsageError("--radii: expected a:b:step, got '" + s + "'");
    const double a = parse_real(parts[0], "--radii"), b = parse_real(parts[1], "--radii"),
                 step = parse_real(parts[2], "--radii");
    if (!(step > 0.0) || b < a) throw UsageError("--radii: need a <= b and step > 0 in '" + s + "'");
    const auto count = static_cast<long>(std::floor((b - a) / step + 1e-9));
    for (long k = 0; k <= count; ++k) out.push_back(a + static_cast<double>(k) * step);
  } else {
    for (const auto& p : split(s, ',')) out.push_back(parse_real(p, "--radii"));
  }
  for (double r : out) {
    if (!(r > 0.0)) throw UsageError("--radii: radii must be positive");
  }
  return out;
}

void write_text(const std::string& path, const std::string& content) {
  if (path == "-") {
    std::cout << content;
    std::cout.flush();
    return;
  }
  std::ofstream out(path);
  if (!out) throw UsageError("--out: cannot write " + path);
  out << content;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

// Options shared by all subcommands. Values from --config fill options
// that were not given on the command line.
struct Common {
  std::string out;
  std::string format = "json";
  std::string manifest;
  std::string config;
  double tol = 1e-12;
  std::uint64_t seed = 20240607;
  unsigned threads = 0;
};

void add_common(CLI::App* sub, Common& c, const std::string& default_out, bool with_format) {
  c.out = default_out;
  sub->add_option("--out", c.out, "Output path, '-' for standard output")->capture_default_str();
  if (with_format) {
    sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
  }
  sub->add_option("--manifest", c.manifest, "Manifest path (default: <out>.manifest.json)");
  sub->add_option("--config", c.config, "JSON file supplying defaults for the flags of this command");
  sub->add_option("--tol", c.tol, "Absolute quadrature tolerance")->capture_default_str();
  sub->add_option("--seed", c.seed, "Random seed")->capture_default_str();
  sub->add_option("--threads", c.threads, "Worker cap (0 = all hardware threads)")->capture_default_str();
}

// Feed unset options from the --config JSON object, keyed by long name.
void apply_config(CLI::App* sub, const std::string& path) {
  if (path.empty()) return;
  const json cfg = read_json_file(path);
  if (!cfg.is_object()) throw ParseError(path + ": config must be a JSON object");
  for (auto it = cfg.begin(); it != cfg.end(); ++it) {
    CLI::Option* opt = nullptr;
    try {
      opt = sub->get_option("--" + it.key());
    } catch (const CLI::OptionNotFound&) {
      throw ParseError(path + ": unknown key \"" + it.key() + "\" for command " + sub->get_name());
    }
    if (opt->count() > 0 || it.key() == "config") continue;
    auto as_text = [](const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
    if (it.value().is_array()) {
      for (const auto& v : it.value()) opt->add_result(as_text(v));
    } else if (it.value().is_boolean()) {
      if (it.value().get<bool>()) opt->add_result("true");
    } else {
      opt->add_result(as_text(it.value()));
    }
    opt->run_callback();
  }
}

std::string manifest_path(const Common& c, const std::string& command) {
  if (!c.manifest.empty()) return c.manifest;
  if (c.out != "-") return c.out + ".manifest.json";
  return "asymfun-" + command + ".manifest.json";
}

void write_manifest(const Common& c, const std::string& command, json config, std::vector<std::string> outputs) {
  config["out"] = c.out;
  config["format"] = c.format;
  config["tol"] = c.tol;
  config["seed"] = c.seed;
  config["threads"] = c.threads;
  if (!c.config.empty()) config["config"] = c.config;
  const std::string path = manifest_path(c, command);
  outputs.push_back(path);
  write_text(path, dump(make_manifest(command, config, outputs)));
}

// Where informational text goes: stderr when data streams to stdout.
std::ostream& info(const Common& c) { return c.out == "-" ? std::cerr : std::cout; }

// --------------------------------------------------------------------------
// Function specs.

struct SpecArgs {
  std::string spec;
  int n = 0;
  std::vector<std::string> targets;
};

void add_spec_options(CLI::App* sub, SpecArgs& s) {
  sub->add_option("--spec", s.spec, "funcspec/1 file, or inline poly:..., series:@file, classic:n");
  sub->add_option("--n", s.n, "Number of rays for an inline construction");
  sub->add_option("--a", s.targets, "Target a_j (poly:c0,c1,... or series:@file); repeat n times");
}

// Returns the spec and a flag telling whether n = 1 was degraded to f = a_1.
EntireSpec build_constructed(int n, const std::vector<std::string>& targets, double tol, bool& trivial) {
  if (n < 1) throw UsageError("--n: must be at least 1");
  if (static_cast<int>(targets.size()) != n) {
    throw UsageError("--a: expected " + std::to_string(n) + " targets, got " + std::to_string(targets.size()));
  }
  std::vector<PowerSeries> series;
  for (const auto& t : targets) series.push_back(parse_target(t, "--a"));
  trivial = n == 1;
  if (trivial) return EntireSpec::from_power_series(series[0]);
  return EntireSpec::constructed(ConstructedF(n, std::move(series), tol));
}

EntireSpec resolve_spec(const SpecArgs& s, double tol) {
  if (!s.spec.empty() && (s.n != 0 || !s.targets.empty())) throw UsageError("--spec: cannot be combined with --n/--a");
  if (s.spec.empty()) {
    if (s.n == 0) throw UsageError("--spec: give a function spec or --n with --a");
    bool trivial = false;
    auto spec = build_constructed(s.n, s.targets, tol, trivial);
    if (trivial) std::cerr << "warning: n = 1 has no construction; using f = a_1\n";
    return spec;
  }
  if (s.spec.rfind("classic:", 0) == 0) {
    ClassicDCA cfg;
    const double n = parse_real(s.spec.substr(8), "--spec");
    if (n != std::floor(n)) throw UsageError("--spec: classic:n needs an integer n");
    cfg.n = static_cast<int>(n);
    try {
      dca_series_radius(cfg);
    } catch (const DomainError& e) {
      throw UsageError(std::string("--spec: ") + e.what());
    }
    return EntireSpec::classic(cfg, tol);
  }
  if (s.spec.rfind("poly:", 0) == 0 || s.spec.rfind("series:@", 0) == 0) {
    return EntireSpec::from_power_series(parse_target(s.spec, "--spec"));
  }
  return funcspec_from_json(read_json_file(s.spec));
}

json spec_config(const SpecArgs& s) {
  json j;
  j["spec"] = s.spec;
  j["n"] = s.n;
  j["a"] = s.targets;
  return j;
}

// --------------------------------------------------------------------------
// Path systems.

struct PathArgs {
  std::string paths;
  int rays = 0;
  double offset = 0.0;
};

void add_path_options(CLI::App* sub, PathArgs& p) {
  sub->add_option("--paths", p.paths, "pathsystem/1 file");
  sub->add_option("--rays", p.rays, "Use n equally spaced rays instead of --paths");
  sub->add_option("--offset", p.offset, "Angle of the first ray for --rays")->capture_default_str();
}

std::optional<PathSystem> resolve_paths(const PathArgs& p) {
  if (!p.paths.empty() && p.rays != 0) throw UsageError("--paths: cannot be combined with --rays");
  if (!p.paths.empty()) return pathsystem_from_json(read_json_file(p.paths));
  if (p.rays != 0) {
    if (p.rays < 1) throw UsageError("--rays: must be at least 1");
    return PathSystem::equally_spaced_rays(p.rays, p.offset);
  }
  return std::nullopt;
}

json path_config(const PathArgs& p) { return {{"paths", p.paths}, {"rays", p.rays}, {"offset", p.offset}}; }

// --------------------------------------------------------------------------
// Commands.

struct ConstructArgs {
  Common common;
  int n = 0;
  std::vector<std::string> targets;
};

int cmd_construct(const ConstructArgs& a) {
  if (a.n == 0) throw UsageError("--n: required");
  bool trivial = false;
  const EntireSpec spec = build_constructed(a.n, a.targets, a.common.tol, trivial);
  json out = to_json(spec);
  if (trivial) {
    out["trivial_construction"] = true;
    std::cerr << "warning: n = 1 is degenerate (the contour folds onto the negative axis); "
                 "writing the trivial construction f = a_1\n";
  }
  write_text(a.common.out, dump(out));
  auto& os = info(a.common);
  os.precision(17);
  os << "c_" << a.n << " = " << c_constant(a.n) << "\n";
  os << "d_" << a.n << " = " << d_constant(a.n) << "\n";
  write_manifest(a.common, "construct", {{"n", a.n}, {"a", a.targets}}, {a.common.out});
  return kExitOk;
}

struct TraceArgs {
  Common common;
  SpecArgs spec;
  std::string radii;
};

int cmd_trace(const TraceArgs& a) {
  const auto radii = parse_radii(a.radii);
  const EntireSpec spec = resolve_spec(a.spec, a.common.tol);
  if (!spec.is_constructed()) throw UsageError("--spec: trace needs a constructed function");
  const int n = spec.as_constructed().n();
  std::ostringstream os;
  json rows = json::array();
  os.precision(17);
  os << "ray_index,r,log10_abs_residual\n";
  for (int j = 1; j <= n; ++j) {
    for (const auto& p : trace_ray(spec, j, radii)) {
      os << j << ',' << p.r << ',' << p.log10_abs_residual << '\n';
      rows.push_back({{"ray_index", j}, {"r", p.r}, {"log10_abs_residual", p.log10_abs_residual}});
    }
  }
  write_text(a.common.out, a.common.format == "csv" ? os.str() : dump({{"trace", rows}}));
  json cfg = spec_config(a.spec);
  cfg["radii"] = radii;
  write_manifest(a.common, "trace", cfg, {a.common.out});
  return kExitOk;
}

struct GrowthArgs {
  Common common;
  SpecArgs spec;
  PathArgs paths;
  std::string radii;
  int domain = 0;
  int coarse = 256;
  std::string fit_out;
  bool probe = false;
  double R1 = 1.0;
  double kappa = 0.5;
};

int cmd_growth(const GrowthArgs& a) {
  const auto radii = parse_radii(a.radii);
  const EntireSpec spec = resolve_spec(a.spec, a.common.tol);
  const auto sys = resolve_paths(a.paths);
  std::optional<DomainRef> dom;
  if (a.domain != 0) {
    if (!sys) throw UsageError("--domain: needs --paths or --rays");
    if (a.domain < 1 || a.domain > sys->size()) throw UsageError("--domain: out of range");
    dom = DomainRef{&*sys, a.domain - 1};
  }
  const auto samples = scan_growth(spec, radii, dom, a.coarse, a.common.threads);
  const OrderFit fit = fit_order(samples);
  json report = {{"fit", to_json(fit)}};
  if (auto order = spec.declared_order()) report["declared_order"] = *order;
  if (a.probe) {
    const PathSystem probe_sys = sys ? *sys
                                     : PathSystem::equally_spaced_rays(
                                           spec.is_constructed() ? spec.as_constructed().n() : 2);
    report["probe"] = to_json(verify_theorem1(spec, probe_sys, a.R1, radii, a.kappa, a.coarse, a.common.threads));
  }
  std::vector<std::string> outputs = {a.common.out};
  if (a.common.format == "csv") {
    std::ostringstream os;
    write_growth_csv(os, samples);
    write_text(a.common.out, os.str());
    const std::string fit_path = !a.fit_out.empty() ? a.fit_out : (a.common.out == "-" ? "" : a.common.out + ".fit.json");
    if (fit_path.empty()) {
      std::cerr << dump(report);
    } else {
      write_text(fit_path, dump(report));
      outputs.push_back(fit_path);
    }
  } else {
    json samples_json = json::array();
    for (const auto& s : samples) samples_json.push_back(to_json(s));
    report["samples"] = samples_json;
    write_text(a.common.out, dump(report));
  }
  json cfg = spec_config(a.spec);
  cfg.update(path_config(a.paths));
  cfg.update({{"radii", radii}, {"domain", a.domain}, {"coarse", a.coarse}, {"fit_out", a.fit_out},
              {"probe", a.probe}, {"R1", a.R1}, {"kappa", a.kappa}});
  write_manifest(a.common, "growth", cfg, outputs);
  return kExitOk;
}

struct DomainArgs {
  Common common;
  PathArgs paths;
  std::vector<int> sectors;
  double R1 = 1.0;
  double R = 0.0;
  std::string radii;
  double kappa = 0.5, kappa1 = 0.3, kappa2 = 0.4;
  bool wos = false;
  std::string z1;
  std::size_t walks = 100'000;
  double eps_shell = 1e-4;
};

int cmd_domain(const DomainArgs& a) {
  const auto sys_opt = resolve_paths(a.paths);
  if (!sys_opt) throw UsageError("--paths: give a path system file or --rays");
  const PathSystem& sys = *sys_opt;
  if (!(a.R > a.R1)) throw UsageError("--R: must exceed --R1");
  std::vector<int> sectors = a.sectors;
  if (sectors.empty()) {
    for (int j = 1; j <= sys.size(); ++j) sectors.push_back(j);
  }
  for (int j : sectors) {
    if (j < 1 || j > sys.size()) throw UsageError("--sector: out of range");
  }
  const std::vector<double> radii = a.radii.empty() ? std::vector<double>{} : parse_radii(a.radii);
  const KappaParams kp{a.kappa, a.kappa1, a.kappa2};

  json reports = json::array();
  for (int j : sectors) reports.push_back(to_json(carleman_report(sys, j - 1, a.R1, a.R, kp, a.common.tol)));
  json slices = json::array();
  json inequalities = json::array();
  std::ostringstream csv;
  csv.precision(17);
  csv << "j,t,phi,arc_count\n";
  for (double t : radii) {
    for (int j : sectors) {
      const AngularSlice s = angular_measure(sys, j - 1, t);
      slices.push_back({{"j", j}, {"slice", to_json(s)}});
      csv << j << ',' << t << ',' << s.phi << ',' << s.arcs.size() << '\n';
    }
    inequalities.push_back(to_json(check_sector_inequality(sys, t)));
  }
  json report = {{"paths", to_json(sys)}, {"carleman", reports}, {"slices", slices}, {"sector_inequality", inequalities}};
  if (a.wos) {
    WosConfig cfg;
    cfg.n_walks = a.walks;
    cfg.eps_shell = a.eps_shell;
    cfg.seed = a.common.seed;
    cfg.threads = a.common.threads;
    json estimates = json::array();
    for (int j : sectors) {
      cplx z1;
      if (!a.z1.empty()) {
        z1 = parse_complex(a.z1, "--z1");
      } else {
        // Middle of the widest arc of D_j at radius 2 R1.
        const AngularSlice s = angular_measure(sys, j - 1, 2.0 * a.R1);
        if (s.arcs.empty()) throw UsageError("--z1: D_" + std::to_string(j) + " misses the circle |z| = 2 R1");
        auto best = s.arcs.front();
        for (const auto& arc : s.arcs) {
          if (arc.second - arc.first > best.second - best.first) best = arc;
        }
        z1 = std::polar(2.0 * a.R1, 0.5 * (best.first + best.second));
      }
      const auto est = estimate_harmonic_measure(sys, j - 1, a.R, z1, cfg);
      const double I = carleman_integral(sys, j - 1, std::abs(z1), a.R, a.common.tol);
      estimates.push_back({{"j", j},
                           {"z1", complex_to_json(z1)},
                           {"estimate", to_json(est)},
                           {"carleman_bound", (8.0 / kPi) * std::exp(-kPi * I)}});
      if (est.warning) std::cerr << "warning: sector " << j << ": " << *est.warning << "\n";
    }
    report["wos"] = estimates;
  }
  write_text(a.common.out, a.common.format == "csv" ? csv.str() : dump(report));
  json cfg = path_config(a.paths);
  cfg.update({{"sector", sectors}, {"R1", a.R1}, {"R", a.R}, {"radii", radii}, {"kappa", a.kappa},
              {"kappa1", a.kappa1}, {"kappa2", a.kappa2}, {"wos", a.wos}, {"z1", a.z1}, {"walks", a.walks},
              {"eps_shell", a.eps_shell}});
  write_manifest(a.common, "domain", cfg, {a.common.out});
  return kExitOk;
}

struct CheckArgs {
  Common common;
  std::string filter;
  std::size_t walks = 100'000;
};

int cmd_check(const CheckArgs& a) {
  VerifyOptions opts;
  opts.filter = a.filter;
  opts.seed = a.common.seed;
  opts.n_walks = a.walks;
  opts.threads = a.common.threads;
  auto& os = info(a.common);
  json results = json::array();
  std::vector<std::string> failed;
  run_verification(opts, [&](const CriterionResult& r) {
    os << (r.passed ? "PASS " : "FAIL ") << r.id << ' ' << r.key;
    if (!r.detail.empty()) os << " -- " << r.detail;
    os << std::endl;
    results.push_back(to_json(r));
    if (!r.passed) failed.push_back(r.key);
  });
  if (results.empty()) throw UsageError("--filter: no criterion matches '" + a.filter + "'");
  write_text(a.common.out, dump({{"passed", failed.empty()}, {"failed", failed}, {"criteria", results}}));
  write_manifest(a.common, "check", {{"filter", a.filter}, {"walks", a.walks}}, {a.common.out});
  if (!failed.empty()) {
    std::cerr << "failed criteria:";
    for (const auto& k : failed) std::cerr << ' ' << k;
    std::cerr << "\n";
    return kExitVerifyFailed;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical lab for entire functions with prescribed asymptotic functions along paths"};
  app.require_subcommand(1);

  ConstructArgs construct;
  auto* c = app.add_subcommand("construct", "Build f with targets a_1..a_n along n rays; write a funcspec/1 file");
  add_common(c, construct.common, "funcspec.json", false);
  c->add_option("--n", construct.n, "Number of rays");
  c->add_option("--a", construct.targets, "Target a_j (poly:c0,c1,... or series:@file); repeat n times");

  TraceArgs trace;
  auto* t = app.add_subcommand("trace", "log10 |f - a_j| along each ray");
  add_common(t, trace.common, "-", true);
  trace.common.format = "csv";
  add_spec_options(t, trace.spec);
  t->add_option("--radii", trace.radii, "a:b:step or comma-separated list");

  GrowthArgs growth;
  auto* g = app.add_subcommand("growth", "log M(r) scan and order fit");
  add_common(g, growth.common, "-", true);
  growth.common.format = "csv";
  add_spec_options(g, growth.spec);
  add_path_options(g, growth.paths);
  g->add_option("--radii", growth.radii, "a:b:step or comma-separated list");
  g->add_option("--domain", growth.domain, "Restrict the maximum to D_j (1-based; 0 = whole circle)");
  g->add_option("--coarse", growth.coarse, "Coarse samples per circle")->capture_default_str();
  g->add_option("--fit-out", growth.fit_out, "JSON fit path in csv mode (default: <out>.fit.json)");
  g->add_flag("--probe", growth.probe, "Add the sector hypothesis / growth conclusion probe");
  g->add_option("--R1", growth.R1, "Inner radius for --probe")->capture_default_str();
  g->add_option("--kappa", growth.kappa, "Hypothesis exponent for --probe")->capture_default_str();

  DomainArgs domain;
  auto* d = app.add_subcommand("domain", "Angular measures, Carleman bounds and harmonic-measure estimates");
  add_common(d, domain.common, "-", true);
  add_path_options(d, domain.paths);
  d->add_option("--sector", domain.sectors, "Sectors D_j to report (1-based; default all)");
  d->add_option("--R1", domain.R1, "Inner radius")->capture_default_str();
  d->add_option("--R", domain.R, "Outer radius");
  d->add_option("--radii", domain.radii, "Radii for angular slices and the sector inequality");
  d->add_option("--kappa", domain.kappa)->capture_default_str();
  d->add_option("--kappa1", domain.kappa1)->capture_default_str();
  d->add_option("--kappa2", domain.kappa2)->capture_default_str();
  d->add_flag("--wos", domain.wos, "Append walk-on-spheres harmonic-measure estimates");
  d->add_option("--z1", domain.z1, "Walk start (re+imi); default: middle of the widest arc at 2 R1");
  d->add_option("--walks", domain.walks, "Walks per estimate")->capture_default_str();
  d->add_option("--eps-shell", domain.eps_shell, "Absorption shell as a fraction of R")->capture_default_str();

  CheckArgs check;
  auto* k = app.add_subcommand("check", "Run the acceptance criteria");
  add_common(k, check.common, "-", false);
  k->add_option("--filter", check.filter, "Run only criteria whose key contains this text");
  k->add_option("--walks", check.walks, "Walks per harmonic-measure estimate")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (c->parsed()) {
      apply_config(c, construct.common.config);
      return cmd_construct(construct);
    }
    if (t->parsed()) {
      apply_config(t, trace.common.config);
      return cmd_trace(trace);
    }
    if (g->parsed()) {
      apply_config(g, growth.common.config);
      return cmd_growth(growth);
    }
    if (d->parsed()) {
      apply_config(d, domain.common.config);
      return cmd_domain(domain);
    }
    apply_config(k, check.common.config);
    return cmd_check(check);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const NonconvergenceError& e) {
    std::cerr << "nonconvergence: " << e.what() << "\n";
    return kExitNonconvergence;
  } catch (const TermCapExceeded& e) {
    std::cerr << "nonconvergence: " << e.what() << "\n";
    return kExitNonconvergence;
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitNonconvergence;
  }
}
