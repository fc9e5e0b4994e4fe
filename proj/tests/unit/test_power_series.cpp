#include <cmath>
#include <vector>

#include "asymfun/errors.hpp"
#include "asymfun/power_series.hpp"
#include "doctest.h"

using namespace asymfun;

namespace {

std::vector<cplx> exp_coeffs(int count) {
  std::vector<cplx> c;
  double f = 1.0;
  for (int k = 0; k < count; ++k) {
    if (k > 0) f /= k;
    c.push_back(f);
  }
  return c;
}

}  // namespace

TEST_CASE("polynomial evaluation") {
  auto p = PowerSeries::polynomial({1.0, cplx(0, 2), 3.0});
  const cplx z(0.5, -1.5);
  CHECK(std::abs(p.eval(z) - (1.0 + cplx(0, 2) * z + 3.0 * z * z)) < 1e-14);
  CHECK(p.degree() == 2);
  CHECK(p.is_polynomial());
  CHECK(*p.declared_order() == 0.0);
  CHECK(p.tail_bound(100.0) == 0.0);
  CHECK_FALSE(p.has_real_coefficients());
  CHECK(PowerSeries::polynomial({0.0, 0.0}).degree() == -1);
  CHECK(PowerSeries::polynomial({0.0}).eval_log(2.0).is_zero());
  CHECK(std::abs(p.eval_log(z).to_complex() - p.eval(z)) < 1e-13);
}

TEST_CASE("series tail bound against doubled truncation") {
  auto s = PowerSeries::series(exp_coeffs(25), 2.0);
  auto s2 = PowerSeries::series(exp_coeffs(50), 2.0);
  CHECK_FALSE(s.declared_order().has_value());
  for (double r : {0.5, 1.0, 2.0}) {
    for (double a : {0.0, 1.0, 2.5}) {
      const cplx z = std::polar(r, a);
      CHECK(std::abs(s.eval(z) - s2.eval(z)) <= s.tail_bound(r) + 1e-15);
      CHECK(std::abs(s2.eval(z) - std::exp(z)) < 1e-14);
    }
  }
  CHECK_THROWS_AS(s.eval(3.0), DomainError);
  CHECK_THROWS_AS(PowerSeries::series({}, 1.0), DomainError);
  CHECK_THROWS_AS(PowerSeries::series({1.0}, 0.0), DomainError);
  s.set_declared_order(1.0);
  CHECK(*s.declared_order() == 1.0);
}
