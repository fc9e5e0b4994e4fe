#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "asymfun/classic.hpp"
#include "asymfun/construct.hpp"
#include "asymfun/geometry.hpp"
#include "asymfun/power_series.hpp"

// Maximum-modulus scans, growth-order fits, residual traces along the rays
// of a constructed function, and a finite-range harness for the growth
// lower bound: a function with n distinct asymptotic functions along n
// paths, growing at most like exp(|z|^kappa) in each sector between them,
// has liminf log M(r) / r^{n/2} > 0.

namespace asymfun {

/// An entire function the growth tools can evaluate.
class EntireSpec {
 public:
  using Function = std::variant<PowerSeries, ConstructedF, ClassicDCA>;

  static EntireSpec from_power_series(PowerSeries ps);
  static EntireSpec constructed(ConstructedF cf);
  static EntireSpec classic(ClassicDCA cfg, double tol = 1e-12);

  const Function& function() const { return fn_; }
  /// "polynomial", "series", "constructed" or "classic".
  std::string kind() const;
  bool is_constructed() const { return std::holds_alternative<ConstructedF>(fn_); }
  const ConstructedF& as_constructed() const;

  /// Polynomials 0, constructed n, classic n/2; series as declared.
  std::optional<double> declared_order() const { return declared_order_; }
  void set_declared_order(std::optional<double> order) { declared_order_ = order; }
  double tol() const { return tol_; }

  LogComplex eval_log(cplx z) const;

 private:
  explicit EntireSpec(Function fn) : fn_(std::move(fn)) {}

  Function fn_;
  std::optional<double> declared_order_;
  double tol_ = 1e-12;
};

/// Domain restriction for max_on_circle: D_j of a path system.
struct DomainRef {
  const PathSystem* sys = nullptr;
  int j = 0;
};

struct GrowthSample {
  double r = 0.0;
  double log_max_mod = 0.0;
  double argmax_theta = 0.0;
  /// Index j of the domain D_j, or -1 for the whole plane.
  int domain_id = -1;
  std::size_t samples_used = 0;
};

/// Estimated order from log M(r) ≈ offset + exp(intercept) r^rho_hat.
struct OrderFit {
  double rho_hat = 0.0;
  double intercept = 0.0;
  double offset = 0.0;
  std::pair<double, double> r_range{0.0, 0.0};
  double residual_rms = 0.0;
  /// Plain least-squares slope of log log M against log r.
  double loglog_slope = 0.0;
  std::size_t samples_used = 0;
  std::size_t deweighted = 0;
};

struct TracePoint {
  double r = 0.0;
  double log10_abs_residual = 0.0;
};

/// log M(r, D, f): `coarse` probes spread over the slice (whole circle when
/// no domain is given), then golden-section refinement around the three
/// best local maxima to 1e-6 rad. Throws EmptySlice.
GrowthSample max_on_circle(const EntireSpec& spec, double r, std::optional<DomainRef> domain = std::nullopt,
                           int coarse = 256);

/// max_on_circle at each radius, spread over `threads` workers (0 = all
/// hardware threads); output order follows `radii`.
std::vector<GrowthSample> scan_growth(const EntireSpec& spec, const std::vector<double>& radii,
                                      std::optional<DomainRef> domain = std::nullopt, int coarse = 256,
                                      unsigned threads = 0);

/// Fits log M = offset + A r^rho by least squares over the samples with
/// log M > 1, then refits once with points more than 2 rms below the curve
/// deweighted (the order is a limsup). Throws InsufficientDynamicRange when
/// fewer than 4 such samples exist or max/min log M < 4.
OrderFit fit_order(const std::vector<GrowthSample>& samples);

/// (r, log10 |f - a_j|) at r * ray_direction(j) for a constructed spec.
std::vector<TracePoint> trace_ray(const EntireSpec& spec, int j, const std::vector<double>& radii);

struct SectorProbe {
  int j = 0;
  /// max over probed z in D_j of log|f(z)| / |z|^kappa.
  double hypothesis_max_ratio = 0.0;
  /// The ratio per radius, in radii order.
  std::vector<double> ratio_by_radius;
  bool hypothesis_ok = false;
  std::string hypothesis_note;
};

struct RadiusProbe {
  double r = 0.0;
  double log_max_mod = 0.0;
  /// log M(r) / r^{n/2}.
  double conclusion_ratio = 0.0;
  /// (pi/8)(r/R1)^{n/2}.
  double chain_lower = 0.0;
  /// Sector chosen by the pigeonhole step (largest Carleman integral).
  int pigeonhole_j = 0;
  double pigeonhole_integral = 0.0;
  double pigeonhole_logM_lower = 0.0;
  double pigeonhole_measured = 0.0;
  bool carleman_consistent = false;
};

struct Theorem1Report {
  int n = 0;
  double R1 = 0.0;
  double kappa = 0.0;
  std::vector<SectorProbe> sectors;
  std::vector<RadiusProbe> radii;
  bool hypothesis_ok = false;
  /// min over the sampled radii of log M(r) / r^{n/2}: a finite-range proxy
  /// for the liminf, not the liminf itself.
  double conclusion_min = 0.0;
  bool conclusion_positive = false;
  bool carleman_consistent = false;
  /// "conclusion-observed", "conclusion-not-observed" or "hypothesis-unmet".
  std::string verdict;
};

Theorem1Report verify_theorem1(const EntireSpec& spec, const PathSystem& sys, double R1,
                               const std::vector<double>& radii, double kappa, int coarse = 256,
                               unsigned threads = 0);

/// CSV with columns r,log_max_mod,argmax_theta,domain_id (17 significant
/// digits).
void write_growth_csv(std::ostream& os, const std::vector<GrowthSample>& samples);

}  // namespace asymfun
