#include "asymfun/classic.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "asymfun/errors.hpp"
#include "asymfun/quadrature.hpp"

namespace asymfun {
namespace {

void validate(const ClassicDCA& cfg) {
  if (cfg.n < 1) throw DomainError("ClassicDCA: n must be >= 1");
  if (!(cfg.series_cutoff_radius > 0.0)) throw DomainError("ClassicDCA: cutoff radius must be positive");
  if (cfg.term_cap < 1) throw DomainError("ClassicDCA: term cap must be positive");
}

cplx series_value(cplx z, const ClassicDCA& cfg) {
  const cplx zn = ipow(z, cfg.n);
  cplx t = 1.0;  // (-1)^k z^{nk} / (2k+1)!
  cplx sum = 0.0;
  for (int k = 0; k < cfg.term_cap; ++k) {
    const cplx term = z * t / static_cast<double>(cfg.n * k + 1);
    sum += term;
    const double ratio = std::abs(zn) / ((2.0 * k + 2.0) * (2.0 * k + 3.0));
    // Once the term ratio is below 1/2 the tail is at most twice the next
    // term, itself below ratio * |term|.
    if (ratio < 0.5 && 2.0 * ratio * std::abs(term) <= 1e-17 * std::abs(sum)) return sum;
    if (term == cplx(0.0, 0.0) && k > 0) return sum;
    t *= -zn / ((2.0 * k + 2.0) * (2.0 * k + 3.0));
  }
  throw TermCapExceeded("eval_dca: series did not converge within " + std::to_string(cfg.term_cap) +
                        " terms at |z| = " + std::to_string(std::abs(z)));
}

}  // namespace

cplx dca_integrand(cplx w, int n) {
  const cplx u = (n % 2 == 0) ? ipow(w, n / 2) : std::pow(w, 0.5 * n);
  if (std::abs(u) < 1e-4) {
    const cplx u2 = u * u;
    return 1.0 - u2 / 6.0 + u2 * u2 / 120.0;
  }
  return std::sin(u) / u;
}

double dca_series_radius(const ClassicDCA& cfg) {
  validate(cfg);
  return std::min(cfg.series_cutoff_radius, std::pow(10.0, 2.0 / cfg.n));
}

cplx eval_dca(cplx z, const ClassicDCA& cfg, double tol) {
  if (!(tol > 0.0)) throw DomainError("eval_dca: tol must be positive");
  const double rs = dca_series_radius(cfg);
  const double r = std::abs(z);
  if (r <= rs) return series_value(z, cfg);
  if (!cfg.quadrature) {
    throw TermCapExceeded("eval_dca: |z| = " + std::to_string(r) + " is beyond series reach " +
                          std::to_string(rs) + " and quadrature is disabled");
  }
  const cplx start = z * (rs / r);
  const cplx waypoints[] = {start};
  return eval_dca_via(z, waypoints, cfg, tol);
}

cplx eval_dca_via(cplx z, std::span<const cplx> waypoints, const ClassicDCA& cfg, double tol) {
  if (waypoints.empty()) return eval_dca(z, cfg, tol);
  const double rs = dca_series_radius(cfg);
  if (std::abs(waypoints.front()) > rs * (1.0 + 1e-12)) {
    throw DomainError("eval_dca_via: first waypoint must lie within the series radius");
  }
  const int n = cfg.n;
  auto integrand = [n](cplx w) { return dca_integrand(w, n); };
  cplx value = series_value(waypoints.front(), cfg);
  const std::size_t legs = waypoints.size();
  const double leg_tol = tol / static_cast<double>(legs);
  for (std::size_t k = 0; k < legs; ++k) {
    const cplx a = waypoints[k];
    const cplx b = (k + 1 < legs) ? waypoints[k + 1] : z;
    QuadOptions opts;
    opts.initial_panels = std::max(1, static_cast<int>(std::ceil(std::abs(b - a))));
    value += integrate_segment(integrand, a, b, leg_tol, opts).value;
  }
  return value;
}

cplx dca_asymptotic_value(int nu, int n) {
  if (n < 2) throw DomainError("dca_asymptotic_value: the integral diverges for n < 2");
  if (nu < 0 || nu >= n) throw DomainError("dca_asymptotic_value: nu must be in [0, n-1]");
  // A_n = (2/n) int_0^inf u^{s-1} sin u du with s = 2/n - 1.
  const double s = 2.0 / n - 1.0;

  // [0, 1]: termwise, int_0^1 u^{s+2k} du = 1/(s+2k+1).
  double head = 0.0;
  double fact = 1.0;  // (2k+1)!
  for (int k = 0; k < 30; ++k) {
    if (k > 0) fact *= (2.0 * k) * (2.0 * k + 1.0);
    head += ((k % 2) ? -1.0 : 1.0) / (fact * (s + 2.0 * k + 1.0));
  }

  // [1, inf): Im int u^{s-1} e^{iu} du, rotated onto 1 + i t where the
  // integrand decays like e^{-t}.
  auto integrand = [s](cplx u) { return std::pow(u, s - 1.0) * std::exp(cplx(0.0, 1.0) * u); };
  const double tail = integrate_decaying_ray(integrand, 1.0, cplx(0.0, 1.0), 1, 1e-14).value.imag();

  const double a_n = (2.0 / n) * (head + tail);
  if (nu == 0) return a_n;
  if (2 * nu == n) return -a_n;
  return std::polar(a_n, kTwoPi * nu / n);
}

}  // namespace asymfun
