#include <cmath>
#include <vector>

#include "asymfun/classic.hpp"
#include "asymfun/errors.hpp"
#include "doctest.h"

using namespace asymfun;

namespace {

// Si(x) by composite Simpson on sin(t)/t; test-side oracle.
double si_oracle(double x) {
  const int m = 200000;
  const double h = x / m;
  auto f = [](double t) { return t == 0.0 ? 1.0 : std::sin(t) / t; };
  double s = f(0.0) + f(x);
  for (int k = 1; k < m; ++k) s += f(k * h) * (k % 2 ? 4.0 : 2.0);
  return s * h / 3.0;
}

// int_0^inf u^{s-1} sin u du = Gamma(s) sin(pi s / 2), -1 < s < 1.
double a_n_closed_form(int n) {
  const double s = 2.0 / n - 1.0;
  if (n == 2) return kPi / 2;
  return (2.0 / n) * std::tgamma(s) * std::sin(kPi * s / 2);
}

}  // namespace

TEST_CASE("eval_dca basic values") {
  ClassicDCA cfg;
  CHECK(eval_dca(0.0, cfg, 1e-12) == cplx(0.0, 0.0));

  double si1 = si_oracle(1.0);
  CHECK(std::abs(si1 - 0.9460830704) < 1e-10);
  CHECK(std::abs(eval_dca(1.0, cfg, 1e-12) - si1) < 1e-12);
  CHECK(std::abs(eval_dca(7.5, cfg, 1e-12) - si_oracle(7.5)) < 1e-11);
  // Past the series radius: series to 10 then quadrature.
  CHECK(std::abs(eval_dca(25.0, cfg, 1e-12) - si_oracle(25.0)) < 1e-10);
  CHECK(std::abs(eval_dca(40.0, cfg, 1e-12) - kPi / 2) < 0.03);
}

TEST_CASE("eval_dca errors") {
  ClassicDCA cfg;
  cfg.quadrature = false;
  CHECK_THROWS_AS(eval_dca(40.0, cfg, 1e-12), TermCapExceeded);
  cfg.quadrature = true;
  cfg.term_cap = 2;
  CHECK_THROWS_AS(eval_dca(5.0, cfg, 1e-12), TermCapExceeded);
  CHECK_THROWS_AS(eval_dca(1.0, ClassicDCA{}, 0.0), DomainError);
}

TEST_CASE("series and quadrature agree at the hand-over radius") {
  for (int n : {1, 2, 3, 4}) {
    ClassicDCA cfg;
    cfg.n = n;
    const double rs = dca_series_radius(cfg);
    for (double ang : {0.0, 0.4, 1.3, 2.9}) {
      cplx inside = std::polar(rs * 0.999, ang);
      const cplx start[] = {std::polar(rs * 0.5, ang)};
      cplx via = eval_dca_via(inside, start, cfg, 1e-13);
      cplx series = eval_dca(inside, cfg, 1e-13);
      CAPTURE(n);
      CHECK(std::abs(via - series) <= 1e-10 * std::max(1.0, std::abs(series)));
    }
  }
}

TEST_CASE("path independence") {
  for (int n : {2, 3}) {
    ClassicDCA cfg;
    cfg.n = n;
    const cplx z(11.0, 4.0);
    cplx direct = eval_dca(z, cfg, 1e-12);
    const cplx route[] = {cplx(0.0, 1.0), cplx(6.0, -2.0), cplx(14.0, 1.0)};
    cplx detour = eval_dca_via(z, route, cfg, 1e-12);
    CAPTURE(n);
    CHECK(std::abs(direct - detour) <= 2e-12 * std::max(1.0, std::abs(direct)));
  }
}

TEST_CASE("asymptotic values") {
  CHECK(std::abs(dca_asymptotic_value(0, 2) - kPi / 2) < 1e-8);
  CHECK(std::abs(dca_asymptotic_value(1, 2) + kPi / 2) < 1e-8);
  for (int n : {3, 4, 5}) {
    CAPTURE(n);
    CHECK(std::abs(dca_asymptotic_value(0, n) - a_n_closed_form(n)) < 1e-8);
    std::vector<cplx> values;
    for (int nu = 0; nu < n; ++nu) values.push_back(dca_asymptotic_value(nu, n));
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) CHECK(std::abs(values[a] - values[b]) > 0.1);
  }
  CHECK_THROWS_AS(dca_asymptotic_value(0, 1), DomainError);
  CHECK_THROWS_AS(dca_asymptotic_value(2, 2), DomainError);
}

TEST_CASE("ray convergence toward the asymptotic values") {
  for (int n : {2, 3}) {
    ClassicDCA cfg;
    cfg.n = n;
    for (int nu = 0; nu < n; ++nu) {
      double prev = 1e300;
      for (double r : {10.0, 20.0, 40.0}) {
        cplx z = std::polar(r, kTwoPi * nu / n);
        double gap = std::abs(eval_dca(z, cfg, 1e-12) - dca_asymptotic_value(nu, n));
        CAPTURE(n);
        CAPTURE(nu);
        CAPTURE(r);
        CHECK(gap < prev);
        prev = gap;
      }
    }
  }
}

TEST_CASE("odd symmetry for n = 2") {
  ClassicDCA cfg;
  CHECK(std::abs(eval_dca(-40.0, cfg, 1e-12) + eval_dca(40.0, cfg, 1e-12)) < 1e-11);
}
