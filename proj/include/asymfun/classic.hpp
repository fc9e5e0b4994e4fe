#pragma once

#include <span>

#include "asymfun/numerics.hpp"

// The sharpness example f(z) = int_0^z w^{-n/2} sin(w^{n/2}) dw: order n/2
// with the n asymptotic values exp(2 pi i nu/n) A_n along the rays
// arg z = 2 pi nu / n.

namespace asymfun {

struct ClassicDCA {
  int n = 2;
  /// Radius below which f is summed from its power series.
  double series_cutoff_radius = 12.0;
  int term_cap = 300;
  /// Continue past the series radius by segment quadrature.
  bool quadrature = true;
};

/// Integrand w^{-n/2} sin(w^{n/2}); even in w^{n/2}, hence branch free.
cplx dca_integrand(cplx w, int n);

/// Radius actually summed by series: the configured cutoff, further capped
/// at |z|^{n/2} <= 10 where the alternating terms would cancel badly.
double dca_series_radius(const ClassicDCA& cfg);

/// f(z) = sum_k (-1)^k z^{nk+1} / ((nk+1) (2k+1)!) inside the series
/// radius; beyond it the series value at the radius plus quadrature along
/// the ray to z. Throws TermCapExceeded when z is out of series reach and
/// quadrature is disabled.
cplx eval_dca(cplx z, const ClassicDCA& cfg, double tol);

/// f(z) integrated along the polyline waypoints[0] -> ... -> z, where the
/// first waypoint must be within the series radius.
cplx eval_dca_via(cplx z, std::span<const cplx> waypoints, const ClassicDCA& cfg, double tol);

/// exp(2 pi i nu/n) * int_0^inf x^{-n/2} sin(x^{n/2}) dx for 0 <= nu < n.
/// Needs n >= 2 (for n = 1 the integral diverges).
cplx dca_asymptotic_value(int nu, int n);

}  // namespace asymfun
