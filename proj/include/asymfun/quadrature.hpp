#pragma once

#include <cstddef>
#include <functional>

#include "asymfun/numerics.hpp"

namespace asymfun {

struct QuadResult {
  cplx value{0.0, 0.0};
  double err_est = 0.0;
  std::size_t evaluations = 0;
};

using ComplexIntegrand = std::function<cplx(cplx)>;

struct QuadOptions {
  /// Maximum bisection depth of any panel.
  int max_depth = 40;
  /// Number of equal panels the interval is cut into before adaptation.
  int initial_panels = 1;
  /// Hard cap on integrand evaluations.
  std::size_t max_evaluations = 5'000'000;
};

/// Number of integrand evaluations in one Gauss-Kronrod 7/15 panel.
inline constexpr std::size_t kPanelEvaluations = 15;

/// Line integral of `integrand` along the straight segment from a to b
/// (dw included), by globally adaptive Gauss-Kronrod 7/15.
///
/// Panels are bisected, worst first, until the summed error estimates drop
/// below `tol` (or below the round-off floor of the accumulated
/// magnitudes). Throws NonconvergenceError when a panel needs splitting past
/// `max_depth` or the evaluation budget is exhausted.
QuadResult integrate_segment(const ComplexIntegrand& integrand, cplx a, cplx b, double tol,
                             const QuadOptions& opts = {});

/// Smallest T (to a relative resolution of 1e-6) with
///   int_T^inf (t+1) exp(-rate * t^n) dt < tol / 10,
/// using a closed-form upper bound on the tail. Nonincreasing in tol.
double truncation_radius(int n, double tol, double rate = 1.0);

/// Closed-form upper bound on int_T^inf (t+1) exp(-rate * t^n) dt for T >= 1.
double decaying_tail_bound(int n, double T, double rate = 1.0);

/// Integral of `integrand` along the ray origin + t*direction, t in [0, inf).
///
/// The caller guarantees |integrand(origin + t*direction)| <=
/// scale * (t+1) * exp(-rate * t^n). The ray is cut at
/// T = truncation_radius(n, tol/scale, rate) and the analytic tail bound is
/// folded into err_est.
QuadResult integrate_decaying_ray(const ComplexIntegrand& integrand, cplx origin, cplx direction,
                                  int n, double tol, double scale = 1.0, double rate = 1.0);

}  // namespace asymfun
