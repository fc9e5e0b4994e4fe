#pragma once

#include <vector>

#include "asymfun/numerics.hpp"
#include "asymfun/power_series.hpp"

// Contour-integral construction of an entire function of order n that is
// asymptotic to n prescribed functions a_1..a_n along the rays
// arg z = 2*pi*j/n.
//
// The kernel integral is
//   E(z) = 1/(2 pi i) * int_Gamma exp(w^n) / (w - z) dw,
// where Gamma runs in along arg w = -pi/n and out along arg w = +pi/n, so
// that w^n = -|w|^n on it. The sector |arg z| < pi/n is "inside", the rest
// of the punctured plane "outside". E continued from the outside is the
// entire function phi, and phi = E + exp(z^n) on the inside.

namespace asymfun {

inline constexpr double kRegionAngTol = 1e-9;

/// c_n = int_0^inf exp(-t^n) dt, by quadrature.
double c_constant(int n);
/// d_n = int_0^inf t exp(-t^n) dt, by quadrature.
double d_constant(int n);

enum class Region { Inside, Outside, OnGamma };

const char* to_string(Region r);

/// Region of z relative to Gamma for order n. Throws DomainError for z = 0.
Region classify_region(cplx z, int n, double ang_tol = kRegionAngTol);

/// A deformation of Gamma: two rays at arg w = +-half_angle, optionally
/// joined by a circular arc of radius arc_radius instead of meeting at 0.
///
/// For every admissible contour C,
///   phi(z) = E_C(z) + [z on the inner side of C] exp(z^n),
/// which is what lets points near Gamma or near 0 be evaluated on a contour
/// kept well away from them.
struct Contour {
  enum class Arc {
    None,
    /// Counterclockwise arc through +arc_radius; the disk is outside.
    ThroughPositiveAxis,
    /// Clockwise arc through -arc_radius; the disk is inside.
    ThroughNegativeAxis,
  };

  int n = 2;
  double half_angle = kPi / 2;
  double arc_radius = 0.0;
  Arc arc = Arc::None;

  /// Gamma itself.
  static Contour gamma(int n);

  /// Throws DomainError unless exp(w^n) decays along both rays, i.e.
  /// half_angle lies strictly inside (pi/(2n), 3pi/(2n)).
  void validate() const;

  /// True when z lies on the inner (positive-axis) side.
  bool encloses(cplx z) const;

  /// Euclidean distance from z to the contour.
  double distance(cplx z) const;
};

enum class ContourSide { Enclose, Exclude, Any };

/// Pick a contour keeping z at distance >= min(0.5, |z| sin(pi/(4n))) from
/// it, on the requested side.
Contour choose_contour(cplx z, int n, ContourSide side);

/// 1/(2 pi i) int_C exp(w^n)/(w - z) dw to absolute accuracy tol.
cplx cauchy_integral(cplx z, const Contour& c, double tol);

/// 1/(2 pi i) int_Gamma exp(w^n) dw, expected to equal c_n sin(pi/n) / pi.
cplx gamma_exp_integral(int n, double tol);

/// E(z) for z off Gamma: E_1 inside, E_2 outside. Both are computed directly
/// on a contour that keeps z on its own side, so E_1 never comes from the
/// cancelling difference phi - exp(z^n).
/// Throws TooCloseToContour within 1e-6 max(1,|z|) of Gamma.
cplx eval_E(cplx z, int n, double tol);

/// The entire function phi.
LogComplex eval_phi(cplx z, int n, double tol);

/// exp(-2 pi i j / n), exact for quarter turns.
cplx root_of_unity_inverse(int j, int n);

/// f(z) = sum_j phi(exp(-2 pi i j/n) z) a_j(z) / exp(z^n).
class ConstructedF {
 public:
  ConstructedF(int n, std::vector<PowerSeries> targets, double tol = 1e-12);

  int n() const { return n_; }
  double tol() const { return tol_; }
  const std::vector<PowerSeries>& targets() const { return targets_; }
  /// a_j for j = 1..n.
  const PowerSeries& target(int j) const;
  /// Direction of gamma_j = { r exp(2 pi i j/n) }.
  cplx ray_direction(int j) const;

 private:
  int n_;
  std::vector<PowerSeries> targets_;
  double tol_;
};

struct FValue {
  LogComplex value;
  /// A partial sum lost most of its digits; see lc_add.
  bool cancellation = false;
};

FValue eval_f(cplx z, const ConstructedF& cf);

/// f(z) - a_{j0}(z) for z on gamma_{j0}, assembled as
///   (E_1(w)/exp(w^n)) a_{j0}(z) + sum_{j != j0} phi_j(z) a_j(z) / exp(z^n)
/// with w = exp(-2 pi i j0/n) z > 0. Throws NotOnRay when arg z is more than
/// 1e-9 rad off the ray.
LogComplex eval_residual(cplx z, int j0, const ConstructedF& cf);

}  // namespace asymfun
