#include "asymfun/construct.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "asymfun/errors.hpp"
#include "asymfun/quadrature.hpp"

namespace asymfun {
namespace {

constexpr double kConstantTol = 1e-14;
constexpr cplx kI(0.0, 1.0);

void require_order(int n, const char* who) {
  if (n < 2) throw DomainError(std::string(who) + ": construction needs n >= 2");
}

double distance_to_ray(cplx z, cplx start, cplx dir) {
  const double s = (std::conj(dir) * (z - start)).real();
  if (s <= 0.0) return std::abs(z - start);
  return std::abs(z - (start + s * dir));
}

}  // namespace

double c_constant(int n) {
  if (n < 1) throw DomainError("c_constant: n must be >= 1");
  auto integrand = [n](cplx t) { return std::exp(-ipow(t, n)); };
  return integrate_decaying_ray(integrand, 0.0, 1.0, n, kConstantTol).value.real();
}

double d_constant(int n) {
  if (n < 1) throw DomainError("d_constant: n must be >= 1");
  auto integrand = [n](cplx t) { return t * std::exp(-ipow(t, n)); };
  return integrate_decaying_ray(integrand, 0.0, 1.0, n, kConstantTol).value.real();
}

const char* to_string(Region r) {
  switch (r) {
    case Region::Inside: return "INSIDE";
    case Region::Outside: return "OUTSIDE";
    case Region::OnGamma: return "ON_GAMMA";
  }
  return "?";
}

Region classify_region(cplx z, int n, double ang_tol) {
  if (z == cplx(0.0, 0.0)) throw DomainError("classify_region: z = 0 has no region");
  require_order(n, "classify_region");
  const double theta = std::abs(std::arg(z));
  const double edge = kPi / n;
  if (std::abs(theta - edge) <= ang_tol) return Region::OnGamma;
  return theta < edge ? Region::Inside : Region::Outside;
}

Contour Contour::gamma(int n) {
  require_order(n, "Contour::gamma");
  Contour c;
  c.n = n;
  c.half_angle = kPi / n;
  return c;
}

void Contour::validate() const {
  require_order(n, "Contour");
  const double lo = kPi / (2.0 * n);
  const double hi = 3.0 * kPi / (2.0 * n);
  if (!(half_angle > lo && half_angle < hi)) {
    throw DomainError("Contour: rays at +-" + std::to_string(half_angle) +
                      " leave the sector where exp(w^n) decays");
  }
  if (arc != Arc::None && !(arc_radius > 0.0)) {
    throw DomainError("Contour: an arc needs a positive radius");
  }
}

bool Contour::encloses(cplx z) const {
  const bool in_sector = z != cplx(0.0, 0.0) && std::abs(std::arg(z)) < half_angle;
  switch (arc) {
    case Arc::None: return in_sector;
    case Arc::ThroughPositiveAxis: return in_sector && std::abs(z) > arc_radius;
    case Arc::ThroughNegativeAxis: return in_sector || std::abs(z) < arc_radius;
  }
  return false;
}

double Contour::distance(cplx z) const {
  const double rho = arc == Arc::None ? 0.0 : arc_radius;
  const cplx up = std::polar(1.0, half_angle);
  const cplx down = std::conj(up);
  double d = std::min(distance_to_ray(z, rho * up, up), distance_to_ray(z, rho * down, down));
  if (arc != Arc::None) {
    const double psi = std::abs(std::arg(z));
    const bool covered = arc == Arc::ThroughPositiveAxis ? psi <= half_angle : psi >= half_angle;
    if (covered) d = std::min(d, std::abs(std::abs(z) - rho));
  }
  return d;
}

Contour choose_contour(cplx z, int n, ContourSide side) {
  require_order(n, "choose_contour");
  Contour c;
  c.n = n;
  const double base = kPi / n;
  const double r = std::abs(z);

  if (r <= 0.5) {
    // Near the vertex every ray contour passes close to z: route around the
    // unit disk instead. exp(w^n) on the arc is at most e, so nothing is lost
    // to scaling.
    c.half_angle = base;
    c.arc_radius = 1.0;
    c.arc = side == ContourSide::Enclose ? Contour::Arc::ThroughNegativeAxis
                                         : Contour::Arc::ThroughPositiveAxis;
    return c;
  }

  const double theta = std::abs(std::arg(z));
  const double q = kPi / (4.0 * n);
  // Ties go to the smaller angle, i.e. the contour is pushed into the inside.
  std::array<double, 3> candidates = {base - q, base, base + q};
  double best = base;
  double best_gap = -1.0;
  for (double alpha : candidates) {
    if (side == ContourSide::Enclose && !(alpha > theta)) continue;
    if (side == ContourSide::Exclude && !(alpha < theta)) continue;
    const double gap = std::abs(theta - alpha);
    if (gap > best_gap) {
      best_gap = gap;
      best = alpha;
    }
  }
  if (best_gap < 0.0) {
    throw TooCloseToContour("choose_contour: no admissible contour puts z on the requested side");
  }
  c.half_angle = best;
  return c;
}

cplx cauchy_integral(cplx z, const Contour& c, double tol) {
  c.validate();
  if (!(tol > 0.0)) throw DomainError("cauchy_integral: tol must be positive");
  const double dist = c.distance(z);
  if (!(dist > 0.0)) throw TooCloseToContour("cauchy_integral: z lies on the contour");

  const int n = c.n;
  auto kernel = [n, z](cplx w) { return std::exp(ipow(w, n)) / (w - z); };
  const double rate = -std::cos(n * c.half_angle);
  const double piece_tol = tol * kTwoPi / 3.0;
  const double rho = c.arc == Contour::Arc::None ? 0.0 : c.arc_radius;
  const cplx up = std::polar(1.0, c.half_angle);
  const cplx down = std::conj(up);

  // Out along the upper ray, in along the lower one.
  cplx total = integrate_decaying_ray(kernel, rho * up, up, n, piece_tol, 1.0 / dist, rate).value;
  total -= integrate_decaying_ray(kernel, rho * down, down, n, piece_tol, 1.0 / dist, rate).value;

  if (c.arc != Contour::Arc::None) {
    auto on_arc = [&kernel, rho](cplx psi) {
      const cplx w = std::polar(rho, psi.real());
      return kernel(w) * kI * w;
    };
    const double start = -c.half_angle;
    const double end =
        c.arc == Contour::Arc::ThroughPositiveAxis ? c.half_angle : c.half_angle - kTwoPi;
    QuadOptions opts;
    opts.initial_panels = 8;
    total += integrate_segment(on_arc, start, end, piece_tol, opts).value;
  }
  return total / (kTwoPi * kI);
}

cplx gamma_exp_integral(int n, double tol) {
  require_order(n, "gamma_exp_integral");
  auto integrand = [n](cplx w) { return std::exp(ipow(w, n)); };
  const cplx up = std::polar(1.0, kPi / n);
  const cplx down = std::conj(up);
  const double piece_tol = tol * kTwoPi / 2.0;
  cplx total = integrate_decaying_ray(integrand, 0.0, up, n, piece_tol).value -
               integrate_decaying_ray(integrand, 0.0, down, n, piece_tol).value;
  return total / (kTwoPi * kI);
}

cplx eval_E(cplx z, int n, double tol) {
  require_order(n, "eval_E");
  const double sep = Contour::gamma(n).distance(z);
  if (sep < 1e-6 * std::max(1.0, std::abs(z))) {
    throw TooCloseToContour("eval_E: z is within " + std::to_string(sep) +
                            " of Gamma, where E jumps by exp(z^n)");
  }
  const bool inside = std::abs(std::arg(z)) < kPi / n;
  const Contour c = choose_contour(z, n, inside ? ContourSide::Enclose : ContourSide::Exclude);
  return cauchy_integral(z, c, tol);
}

LogComplex eval_phi(cplx z, int n, double tol) {
  require_order(n, "eval_phi");
  const Contour c = choose_contour(z, n, ContourSide::Any);
  const LogComplex e = LogComplex::from_complex(cauchy_integral(z, c, tol));
  if (!c.encloses(z)) return e;
  return lc_add(lc_exp_zn(z, n), e).value;
}

cplx root_of_unity_inverse(int j, int n) {
  const int k = ((j % n) + n) % n;
  if ((4 * k) % n == 0) {
    switch ((4 * k) / n) {
      case 0: return {1.0, 0.0};
      case 1: return {0.0, -1.0};
      case 2: return {-1.0, 0.0};
      case 3: return {0.0, 1.0};
    }
  }
  return std::polar(1.0, -kTwoPi * k / n);
}

ConstructedF::ConstructedF(int n, std::vector<PowerSeries> targets, double tol)
    : n_(n), targets_(std::move(targets)), tol_(tol) {
  require_order(n, "ConstructedF");
  if (static_cast<int>(targets_.size()) != n) {
    throw DomainError("ConstructedF: expected " + std::to_string(n) + " target functions, got " +
                      std::to_string(targets_.size()));
  }
  if (!(tol > 0.0)) throw DomainError("ConstructedF: tol must be positive");
}

const PowerSeries& ConstructedF::target(int j) const {
  if (j < 1 || j > n_) throw DomainError("ConstructedF: target index out of range");
  return targets_[static_cast<std::size_t>(j - 1)];
}

cplx ConstructedF::ray_direction(int j) const { return std::conj(root_of_unity_inverse(j, n_)); }

FValue eval_f(cplx z, const ConstructedF& cf) {
  const int n = cf.n();
  const LogComplex damp = lc_inv(lc_exp_zn(z, n));
  LcAccumulator acc;
  for (int j = 1; j <= n; ++j) {
    const LogComplex a = cf.target(j).eval_log(z);
    if (a.is_zero()) continue;
    const LogComplex phi = eval_phi(root_of_unity_inverse(j, n) * z, n, cf.tol());
    acc.add(phi * a * damp);
  }
  return {acc.value(), acc.cancellation()};
}

LogComplex eval_residual(cplx z, int j0, const ConstructedF& cf) {
  const int n = cf.n();
  if (j0 < 1 || j0 > n) throw DomainError("eval_residual: ray index out of range");
  const cplx w = root_of_unity_inverse(j0, n) * z;
  if (z == cplx(0.0, 0.0) || std::abs(std::arg(w)) > kRegionAngTol) {
    throw NotOnRay("eval_residual: z is not on gamma_" + std::to_string(j0));
  }
  const LogComplex damp = lc_inv(lc_exp_zn(z, n));
  LcAccumulator acc;
  const LogComplex own = cf.target(j0).eval_log(z);
  if (!own.is_zero()) acc.add(LogComplex::from_complex(eval_E(w, n, cf.tol())) * own * damp);
  for (int j = 1; j <= n; ++j) {
    if (j == j0) continue;
    const LogComplex a = cf.target(j).eval_log(z);
    if (a.is_zero()) continue;
    acc.add(eval_phi(root_of_unity_inverse(j, n) * z, n, cf.tol()) * a * damp);
  }
  return acc.value();
}

}  // namespace asymfun
