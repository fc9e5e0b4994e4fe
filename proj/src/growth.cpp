#include "asymfun/growth.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <exception>
#include <iomanip>
#include <limits>
#include <string>
#include <thread>

#include "asymfun/errors.hpp"

namespace asymfun {
namespace {

constexpr double kAngularResolution = 1e-6;
constexpr double kNegInf = -std::numeric_limits<double>::infinity();

AngularSlice slice_with_jitter(const PathSystem& sys, int j, double r) {
  try {
    return angular_measure(sys, j, r);
  } catch (const DegenerateRadius&) {
  }
  try {
    return angular_measure(sys, j, r * (1.0 + kRadiusJitter));
  } catch (const DegenerateRadius&) {
  }
  return angular_measure(sys, j, r * (1.0 - kRadiusJitter));
}

struct Arc {
  double lo;
  double hi;
  bool cyclic;
  std::vector<double> theta;
  std::vector<double> value;
};

// Weighted least squares for y = B + A r^rho at fixed rho; returns RSS.
double linear_fit(const std::vector<double>& r, const std::vector<double>& y, const std::vector<double>& w,
                  double rho, double& B, double& A) {
  double sw = 0, sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < r.size(); ++i) {
    const double x = std::pow(r[i], rho);
    sw += w[i];
    sx += w[i] * x;
    sy += w[i] * y[i];
    sxx += w[i] * x * x;
    sxy += w[i] * x * y[i];
  }
  const double xm = sx / sw;
  const double ym = sy / sw;
  const double var = sxx - sw * xm * xm;
  A = var > 0.0 ? (sxy - sw * xm * ym) / var : 0.0;
  B = ym - A * xm;
  double rss = 0.0;
  for (std::size_t i = 0; i < r.size(); ++i) {
    const double e = y[i] - B - A * std::pow(r[i], rho);
    rss += w[i] * e * e;
  }
  return rss;
}

// Fit y = B + A r^rho: profile scan over rho, then Levenberg-Marquardt on
// all three parameters.
void fit_power_model(const std::vector<double>& r, const std::vector<double>& y, const std::vector<double>& w,
                     double& B, double& A, double& rho) {
  double best = std::numeric_limits<double>::infinity();
  for (int k = 0; k <= 600; ++k) {
    const double trial = 0.02 * std::pow(1000.0, k / 600.0);  // 0.02 .. 20
    double b, a;
    const double rss = linear_fit(r, y, w, trial, b, a);
    if (a > 0.0 && rss < best) {
      best = rss;
      rho = trial;
      B = b;
      A = a;
    }
  }
  if (!std::isfinite(best)) throw InsufficientDynamicRange("fit_order: samples do not increase with r");

  auto rss_of = [&](double b, double a, double p) {
    double s = 0.0;
    for (std::size_t i = 0; i < r.size(); ++i) {
      const double e = y[i] - b - a * std::pow(r[i], p);
      s += w[i] * e * e;
    }
    return s;
  };
  double lambda = 1e-3;
  double current = rss_of(B, A, rho);
  for (int iter = 0; iter < 200 && current > 0.0; ++iter) {
    std::array<std::array<double, 3>, 3> JtJ{};
    std::array<double, 3> Jte{};
    for (std::size_t i = 0; i < r.size(); ++i) {
      const double x = std::pow(r[i], rho);
      const std::array<double, 3> g{1.0, x, A * x * std::log(r[i])};
      const double e = y[i] - B - A * x;
      for (int p = 0; p < 3; ++p) {
        Jte[p] += w[i] * g[p] * e;
        for (int q = 0; q < 3; ++q) JtJ[p][q] += w[i] * g[p] * g[q];
      }
    }
    bool improved = false;
    for (int attempt = 0; attempt < 30 && !improved; ++attempt) {
      auto M = JtJ;
      std::array<double, 3> rhs = Jte;
      for (int p = 0; p < 3; ++p) M[p][p] *= 1.0 + lambda;
      // Gaussian elimination with partial pivoting.
      bool singular = false;
      for (int c = 0; c < 3; ++c) {
        int piv = c;
        for (int k = c + 1; k < 3; ++k)
          if (std::abs(M[k][c]) > std::abs(M[piv][c])) piv = k;
        std::swap(M[c], M[piv]);
        std::swap(rhs[c], rhs[piv]);
        if (M[c][c] == 0.0) {
          singular = true;
          break;
        }
        for (int k = c + 1; k < 3; ++k) {
          const double f = M[k][c] / M[c][c];
          for (int q = c; q < 3; ++q) M[k][q] -= f * M[c][q];
          rhs[k] -= f * rhs[c];
        }
      }
      if (singular) {
        lambda *= 10.0;
        continue;
      }
      std::array<double, 3> step{};
      for (int c = 2; c >= 0; --c) {
        double s = rhs[c];
        for (int q = c + 1; q < 3; ++q) s -= M[c][q] * step[q];
        step[c] = s / M[c][c];
      }
      const double nb = B + step[0], na = A + step[1], np = rho + step[2];
      const double trial = (np > 0.0) ? rss_of(nb, na, np) : std::numeric_limits<double>::infinity();
      if (trial < current) {
        const bool tiny = std::abs(step[2]) <= 1e-15 * std::abs(rho);
        B = nb;
        A = na;
        rho = np;
        current = trial;
        lambda = std::max(lambda / 10.0, 1e-12);
        improved = true;
        if (tiny) return;
      } else {
        lambda *= 10.0;
      }
    }
    if (!improved) return;
  }
}

}  // namespace

EntireSpec EntireSpec::from_power_series(PowerSeries ps) {
  const auto order = ps.declared_order();
  EntireSpec s{Function(std::move(ps))};
  s.declared_order_ = order;
  return s;
}

EntireSpec EntireSpec::constructed(ConstructedF cf) {
  const double order = cf.n();
  const double tol = cf.tol();
  EntireSpec s{Function(std::move(cf))};
  s.declared_order_ = order;
  s.tol_ = tol;
  return s;
}

EntireSpec EntireSpec::classic(ClassicDCA cfg, double tol) {
  if (!(tol > 0.0)) throw DomainError("EntireSpec: tol must be positive");
  dca_series_radius(cfg);  // validates
  const double order = 0.5 * cfg.n;
  EntireSpec s{Function(cfg)};
  s.declared_order_ = order;
  s.tol_ = tol;
  return s;
}

std::string EntireSpec::kind() const {
  if (const auto* ps = std::get_if<PowerSeries>(&fn_)) return ps->is_polynomial() ? "polynomial" : "series";
  if (is_constructed()) return "constructed";
  return "classic";
}

const ConstructedF& EntireSpec::as_constructed() const {
  if (const auto* cf = std::get_if<ConstructedF>(&fn_)) return *cf;
  throw DomainError("spec is " + kind() + ", not a constructed function");
}

LogComplex EntireSpec::eval_log(cplx z) const {
  if (const auto* ps = std::get_if<PowerSeries>(&fn_)) return ps->eval_log(z);
  if (const auto* cf = std::get_if<ConstructedF>(&fn_)) return eval_f(z, *cf).value;
  return LogComplex::from_complex(eval_dca(z, std::get<ClassicDCA>(fn_), tol_));
}

GrowthSample max_on_circle(const EntireSpec& spec, double r, std::optional<DomainRef> domain, int coarse) {
  if (!(r > 0.0) || !std::isfinite(r)) throw DomainError("max_on_circle: r must be positive");
  if (coarse < 64) throw DomainError("max_on_circle: coarse must be >= 64");

  std::vector<Arc> arcs;
  if (domain) {
    if (!domain->sys) throw DomainError("max_on_circle: null path system");
    const AngularSlice slice = slice_with_jitter(*domain->sys, domain->j, r);
    if (slice.phi <= 0.0) throw EmptySlice("max_on_circle: D_j ∩ S(0, r) is empty");
    const bool whole = slice.arcs.size() == 1 && slice.phi >= kTwoPi;
    for (const auto& [lo, hi] : slice.arcs) {
      Arc a{lo, hi, whole, {}, {}};
      const int m = std::max(3, static_cast<int>(std::lround(coarse * (hi - lo) / slice.phi)));
      for (int k = 0; k < m; ++k) a.theta.push_back(whole ? lo + (hi - lo) * k / m : lo + (hi - lo) * (k + 0.5) / m);
      arcs.push_back(std::move(a));
    }
  } else {
    Arc a{0.0, kTwoPi, true, {}, {}};
    for (int k = 0; k < coarse; ++k) a.theta.push_back(kTwoPi * k / coarse);
    arcs.push_back(std::move(a));
  }

  GrowthSample best;
  best.r = r;
  best.domain_id = domain ? domain->j : -1;
  best.log_max_mod = kNegInf;
  auto probe = [&](double theta) {
    const double v = spec.eval_log(std::polar(r, theta)).log_mod();
    ++best.samples_used;
    if (v > best.log_max_mod || best.samples_used == 1) {
      best.log_max_mod = v;
      best.argmax_theta = normalize_arg(theta);
    }
    return v;
  };

  struct Candidate {
    double value;
    double lo;
    double hi;
  };
  std::vector<Candidate> candidates;
  for (Arc& a : arcs) {
    for (double th : a.theta) a.value.push_back(probe(th));
    const int m = static_cast<int>(a.theta.size());
    const double step = a.cyclic ? kTwoPi / m : (a.hi - a.lo) / m;
    for (int k = 0; k < m; ++k) {
      const bool has_prev = a.cyclic || k > 0;
      const bool has_next = a.cyclic || k + 1 < m;
      const double prev = has_prev ? a.value[(k + m - 1) % m] : kNegInf;
      const double next = has_next ? a.value[(k + 1) % m] : kNegInf;
      if (a.value[k] >= prev && a.value[k] >= next) {
        const double lo = has_prev ? a.theta[k] - step : a.lo;
        const double hi = has_next ? a.theta[k] + step : a.hi;
        candidates.push_back({a.value[k], lo, hi});
      }
    }
  }
  std::sort(candidates.begin(), candidates.end(),
            [](const Candidate& x, const Candidate& y) { return x.value > y.value; });
  if (candidates.size() > 3) candidates.resize(3);

  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  for (const Candidate& c : candidates) {
    double lo = c.lo, hi = c.hi;
    double x1 = hi - invphi * (hi - lo), x2 = lo + invphi * (hi - lo);
    double f1 = probe(x1), f2 = probe(x2);
    while (hi - lo > kAngularResolution) {
      if (f1 >= f2) {
        hi = x2;
        x2 = x1;
        f2 = f1;
        x1 = hi - invphi * (hi - lo);
        f1 = probe(x1);
      } else {
        lo = x1;
        x1 = x2;
        f1 = f2;
        x2 = lo + invphi * (hi - lo);
        f2 = probe(x2);
      }
    }
  }
  return best;
}

std::vector<GrowthSample> scan_growth(const EntireSpec& spec, const std::vector<double>& radii,
                                      std::optional<DomainRef> domain, int coarse, unsigned threads) {
  std::vector<GrowthSample> out(radii.size());
  unsigned workers = threads ? threads : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, radii.size()));
  if (workers <= 1) {
    for (std::size_t i = 0; i < radii.size(); ++i) out[i] = max_on_circle(spec, radii[i], domain, coarse);
    return out;
  }
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < radii.size(); i += workers) out[i] = max_on_circle(spec, radii[i], domain, coarse);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

OrderFit fit_order(const std::vector<GrowthSample>& samples) {
  std::vector<double> r, y;
  for (const auto& s : samples) {
    if (s.log_max_mod > 1.0 && std::isfinite(s.log_max_mod)) {
      r.push_back(s.r);
      y.push_back(s.log_max_mod);
    }
  }
  if (r.size() < 4) {
    throw InsufficientDynamicRange("fit_order: need at least 4 samples with log M > 1, got " +
                                   std::to_string(r.size()));
  }
  const auto [ymin, ymax] = std::minmax_element(y.begin(), y.end());
  if (*ymax / *ymin < 4.0) {
    throw InsufficientDynamicRange("fit_order: max/min of log M is " + std::to_string(*ymax / *ymin) +
                                   " (< 4); widen the radius range");
  }
  for (double v : r) {
    if (!(v > 0.0)) throw DomainError("fit_order: radii must be positive");
  }

  OrderFit fit;
  fit.samples_used = r.size();
  fit.r_range = {*std::min_element(r.begin(), r.end()), *std::max_element(r.begin(), r.end())};

  // Plain log log M against log r.
  {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double m = static_cast<double>(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) {
      const double lx = std::log(r[i]), ly = std::log(y[i]);
      sx += lx;
      sy += ly;
      sxx += lx * lx;
      sxy += lx * ly;
    }
    fit.loglog_slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
  }

  std::vector<double> w(r.size(), 1.0);
  double B = 0, A = 1, rho = 1;
  fit_power_model(r, y, w, B, A, rho);
  auto rms = [&](const std::vector<double>& weights, std::vector<double>* residuals) {
    double s = 0.0, sw = 0.0;
    for (std::size_t i = 0; i < r.size(); ++i) {
      const double e = y[i] - B - A * std::pow(r[i], rho);
      if (residuals) (*residuals)[i] = e;
      s += weights[i] * e * e;
      sw += weights[i];
    }
    return std::sqrt(s / sw);
  };
  std::vector<double> res(r.size());
  const double first_rms = rms(w, &res);
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (res[i] < -2.0 * first_rms && -res[i] > 1e-9 * std::max(1.0, std::abs(y[i]))) {
      w[i] = 0.1;
      ++fit.deweighted;
    }
  }
  if (fit.deweighted > 0) fit_power_model(r, y, w, B, A, rho);

  fit.rho_hat = rho;
  fit.intercept = std::log(A);
  fit.offset = B;
  fit.residual_rms = rms(w, nullptr);
  return fit;
}

std::vector<TracePoint> trace_ray(const EntireSpec& spec, int j, const std::vector<double>& radii) {
  const ConstructedF& cf = spec.as_constructed();
  if (j < 1 || j > cf.n()) throw DomainError("trace_ray: ray index out of range");
  std::vector<TracePoint> out;
  for (double r : radii) {
    if (!(r > 0.0)) throw DomainError("trace_ray: radii must be positive");
    const LogComplex res = eval_residual(r * cf.ray_direction(j), j, cf);
    out.push_back({r, res.log10_abs()});
  }
  return out;
}

Theorem1Report verify_theorem1(const EntireSpec& spec, const PathSystem& sys, double R1,
                               const std::vector<double>& radii, double kappa, int coarse, unsigned threads) {
  sys.validate();
  if (!(R1 > 0.0)) throw DomainError("verify_theorem1: R1 must be positive");
  if (!(kappa > 0.0)) throw DomainError("verify_theorem1: kappa must be positive");
  if (radii.empty()) throw DomainError("verify_theorem1: no radii");
  for (std::size_t i = 0; i < radii.size(); ++i) {
    if (i > 0 && !(radii[i] > radii[i - 1])) throw DomainError("verify_theorem1: radii must increase");
  }
  if (!(radii.front() > R1)) throw DomainError("verify_theorem1: radii must exceed R1");

  const int n = sys.size();
  const double half_n = 0.5 * n;
  Theorem1Report rep;
  rep.n = n;
  rep.R1 = R1;
  rep.kappa = kappa;
  rep.hypothesis_ok = true;

  std::vector<std::vector<GrowthSample>> sector_samples;
  for (int j = 0; j < n; ++j) {
    sector_samples.push_back(scan_growth(spec, radii, DomainRef{&sys, j}, coarse, threads));
    SectorProbe sp;
    sp.j = j;
    sp.hypothesis_max_ratio = -std::numeric_limits<double>::infinity();
    for (const auto& s : sector_samples.back()) {
      const double ratio = s.log_max_mod / std::pow(s.r, kappa);
      sp.ratio_by_radius.push_back(ratio);
      sp.hypothesis_max_ratio = std::max(sp.hypothesis_max_ratio, ratio);
    }
    const auto order = spec.declared_order();
    if (order && *order < kappa) {
      sp.hypothesis_note = "declared order " + std::to_string(*order) + " is below kappa, so log|f|/|z|^kappa -> 0";
    } else if (sp.hypothesis_max_ratio <= 0.0) {
      sp.hypothesis_note = "log|f|/|z|^kappa <= 0 at every probe";
    } else if (sp.ratio_by_radius.back() < 0.5 * sp.hypothesis_max_ratio) {
      sp.hypothesis_note = "log|f|/|z|^kappa decays over the sampled radii";
    } else {
      sp.hypothesis_ok = true;
      sp.hypothesis_note = "positive and not decaying over the sampled radii";
    }
    rep.hypothesis_ok = rep.hypothesis_ok && sp.hypothesis_ok;
    rep.sectors.push_back(std::move(sp));
  }

  const auto whole = scan_growth(spec, radii, std::nullopt, coarse, threads);
  rep.conclusion_min = std::numeric_limits<double>::infinity();
  rep.carleman_consistent = true;
  for (std::size_t i = 0; i < radii.size(); ++i) {
    RadiusProbe rp;
    rp.r = radii[i];
    rp.log_max_mod = whole[i].log_max_mod;
    rp.conclusion_ratio = rp.log_max_mod / std::pow(rp.r, half_n);
    rp.chain_lower = (kPi / 8.0) * std::pow(rp.r / R1, half_n);
    rp.pigeonhole_integral = -1.0;
    for (int j = 0; j < n; ++j) {
      const double I = carleman_integral(sys, j, R1, rp.r);
      if (I > rp.pigeonhole_integral) {
        rp.pigeonhole_integral = I;
        rp.pigeonhole_j = j;
      }
    }
    rp.pigeonhole_logM_lower = (kPi / 8.0) * std::exp(kPi * rp.pigeonhole_integral);
    rp.pigeonhole_measured = sector_samples[rp.pigeonhole_j][i].log_max_mod;
    rp.carleman_consistent = rp.pigeonhole_measured >= 0.9 * rp.pigeonhole_logM_lower;
    rep.carleman_consistent = rep.carleman_consistent && rp.carleman_consistent;
    rep.conclusion_min = std::min(rep.conclusion_min, rp.conclusion_ratio);
    rep.radii.push_back(rp);
  }
  rep.conclusion_positive = rep.conclusion_min > 0.0;
  if (!rep.hypothesis_ok) {
    rep.verdict = "hypothesis-unmet";
  } else {
    rep.verdict = rep.conclusion_positive ? "conclusion-observed" : "conclusion-not-observed";
  }
  return rep;
}

void write_growth_csv(std::ostream& os, const std::vector<GrowthSample>& samples) {
  const auto old_prec = os.precision(17);
  os << "r,log_max_mod,argmax_theta,domain_id\n";
  for (const auto& s : samples) {
    os << s.r << ',' << s.log_max_mod << ',' << s.argmax_theta << ',';
    if (s.domain_id < 0) {
      os << "whole";
    } else {
      os << s.domain_id;
    }
    os << '\n';
  }
  os.precision(old_prec);
}

}  // namespace asymfun
