#include <cmath>
#include <random>
#include <vector>

#include "asymfun/construct.hpp"
#include "asymfun/errors.hpp"
#include "doctest.h"

using namespace asymfun;

namespace {

constexpr double kTol = 1e-12;

// Test-side oracles for n = 2, where Gamma is the imaginary axis and
// phi(z) = exp(z^2) (1 + erf z) / 2.

// erfcx(x) = exp(x^2) erfc(x) by its asymptotic series, x >= 20.
double erfcx_asymptotic(double x) {
  double term = 1.0, sum = 1.0;
  for (int k = 1; k < 40; ++k) {
    double next = -term * (2.0 * k - 1.0) / (2.0 * x * x);
    if (std::abs(next) > std::abs(term)) break;
    term = next;
    sum += term;
  }
  return sum / (x * std::sqrt(kPi));
}

// erf by its Taylor series; fine for |z| <= 3.
cplx erf_series(cplx z) {
  cplx term = z, sum = z;
  const cplx z2 = z * z;
  for (int k = 1; k < 200; ++k) {
    term *= -z2 / static_cast<double>(k);
    cplx add = term / static_cast<double>(2 * k + 1);
    sum += add;
    if (std::abs(add) < 1e-18 * std::abs(sum)) break;
  }
  return sum * (2.0 / std::sqrt(kPi));
}

cplx phi2_oracle(cplx z) { return std::exp(z * z) * (1.0 + erf_series(z)) / 2.0; }

cplx direct_f(cplx z, const ConstructedF& cf) { return eval_f(z, cf).value.to_complex(); }

ConstructedF demo_f(int n, std::vector<PowerSeries> targets) { return {n, std::move(targets), kTol}; }

PowerSeries poly(std::vector<cplx> c) { return PowerSeries::polynomial(std::move(c)); }

}  // namespace

TEST_CASE("c_n and d_n against Gamma-function identities") {
  for (int n = 1; n <= 6; ++n) {
    CAPTURE(n);
    CHECK(std::abs(c_constant(n) - std::tgamma(1.0 + 1.0 / n)) < 1e-10);
    CHECK(std::abs(d_constant(n) - std::tgamma(2.0 / n) / n) < 1e-10);
  }
  CHECK(std::abs(c_constant(2) - 0.8862269255) < 1e-10);
  CHECK(std::abs(c_constant(4) - 0.9064024771) < 1e-10);
  CHECK(std::abs(d_constant(2) - 0.5) < 1e-10);
  CHECK(std::abs(d_constant(4) - 0.4431134627) < 1e-10);
  CHECK_THROWS_AS(c_constant(0), DomainError);
}

TEST_CASE("classify_region") {
  CHECK(classify_region(5.0, 3) == Region::Inside);
  CHECK(classify_region(-5.0, 3) == Region::Outside);
  CHECK(classify_region(std::polar(2.0, kPi / 3), 3, 1e-9) == Region::OnGamma);
  CHECK(classify_region(std::polar(2.0, -kPi / 3), 3, 1e-9) == Region::OnGamma);
  CHECK_THROWS_AS(classify_region(0.0, 3), DomainError);
}

TEST_CASE("contour identity (1/2 pi i) int exp(w^n) dw = c_n sin(pi/n) / pi") {
  for (int n : {2, 3, 4, 5}) {
    CAPTURE(n);
    cplx I = gamma_exp_integral(n, 1e-13);
    CHECK(std::abs(I - c_constant(n) * std::sin(kPi / n) / kPi) < 1e-9);
  }
}

TEST_CASE("E on the negative axis matches erfcx and decays like the leading term") {
  const double lead = c_constant(2) / kPi;
  CHECK(std::abs(lead - 0.2820947918) < 1e-10);
  std::vector<double> scaled;
  std::vector<double> err;
  for (double R : {20.0, 40.0, 80.0}) {
    cplx E = eval_E(-R, 2, 1e-14);
    CHECK(std::abs(E - erfcx_asymptotic(R) / 2.0) < 1e-13);
    CHECK(std::abs(E.imag()) < 1e-15);
    err.push_back(std::abs(E + lead / cplx(-R, 0.0)));
    scaled.push_back(R * R * err.back());
  }
  for (int k = 0; k + 1 < 3; ++k) {
    CHECK(err[k + 1] <= err[k] / 3.0);
    CHECK(scaled[k] / scaled[k + 1] <= 3.0);
    CHECK(scaled[k + 1] / scaled[k] <= 3.0);
  }
}

TEST_CASE("E and phi against the n = 2 closed form") {
  // On the real axis E_1(x) = -erfcx(x)/2 and E_2(-x) = erfcx(x)/2.
  CHECK(std::abs(eval_E(1.0, 2, kTol) - (-std::exp(1.0) * std::erfc(1.0) / 2)) < 1e-12);
  CHECK(std::abs(eval_E(-3.0, 2, kTol) - std::exp(9.0) * std::erfc(3.0) / 2) < 1e-12);

  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> rad(0.0, 3.0), ang(-kPi, kPi);
  for (int k = 0; k < 60; ++k) {
    cplx z = std::polar(rad(rng), ang(rng));
    cplx expect = phi2_oracle(z);
    cplx got = eval_phi(z, 2, kTol).to_complex();
    CAPTURE(z);
    REQUIRE(std::abs(got - expect) <= 1e-10 * std::max(1.0, std::abs(expect)));
  }
}

TEST_CASE("eval_phi examples") {
  auto inside = eval_phi(3.0, 2, kTol);
  CHECK(std::abs(inside.log_mod() - 9.0) < 1e-3);
  cplx E1 = eval_E(3.0, 2, kTol);
  CHECK(std::abs(inside.log_mod() - (9.0 + std::log(std::abs(1.0 + E1 * std::exp(-9.0))))) < 1e-12);

  double outside = std::abs(eval_phi(-3.0, 2, kTol).to_complex());
  CHECK(std::abs(outside - 0.2820948 / 3.0) <= 0.1 * (0.2820948 / 3.0));

  // E_1(1) = phi(1) - e, with phi(1) taken from a contour that excludes 1.
  Contour around;
  around.n = 2;
  around.half_angle = kPi / 2;
  around.arc_radius = 1.5;
  around.arc = Contour::Arc::ThroughPositiveAxis;
  REQUIRE_FALSE(around.encloses(1.0));
  cplx phi1 = cauchy_integral(1.0, around, kTol);
  CHECK(std::abs(eval_E(1.0, 2, kTol) - (phi1 - std::exp(1.0))) < 1e-11);
}

TEST_CASE("phi is continuous across Gamma (Richardson two-sided limits)") {
  const cplx z0(0.0, 2.0);
  const cplx normal(1.0, 0.0);  // points into the inside for n = 2
  auto side_limit = [&](double sign) {
    const double h = 1e-4;
    cplx a = eval_phi(z0 + sign * h * normal, 2, 1e-14).to_complex();
    cplx b = eval_phi(z0 + sign * 0.5 * h * normal, 2, 1e-14).to_complex();
    return 2.0 * b - a;
  };
  cplx from_inside = side_limit(1.0);
  cplx from_outside = side_limit(-1.0);
  CHECK(std::abs(from_inside - from_outside) < 1e-8);
  // On Gamma, phi(iy) = exp(-y^2)/2 + i D(y)/sqrt(pi), D the Dawson integral.
  auto dawson_integrand = [](cplx t) { return std::exp(t * t - 4.0); };
  cplx dawson = 0.0;
  const int m = 20000;
  for (int k = 0; k < m; ++k) {
    double t0 = 2.0 * k / m, t1 = 2.0 * (k + 1) / m;
    dawson += (dawson_integrand(t0) + 4.0 * dawson_integrand(0.5 * (t0 + t1)) + dawson_integrand(t1)) *
              (t1 - t0) / 6.0;
  }
  cplx expect(std::exp(-4.0) / 2.0, dawson.real() / std::sqrt(kPi));
  CHECK(std::abs(eval_phi(z0, 2, kTol).to_complex() - expect) < 1e-10);
}

TEST_CASE("entirety: both contour formulas agree on Gamma") {
  for (int n : {2, 3, 4}) {
    double worst = 0.0;
    for (int k = 0; k < 50; ++k) {
      double r = 0.5 + 4.5 * k / 49.0;
      double sign = (k % 2) ? 1.0 : -1.0;
      cplx z = std::polar(r, sign * kPi / n);
      // Contour with z strictly on its inner side versus one with z outside.
      Contour in = choose_contour(z * std::polar(1.0, -sign * 1e-3), n, ContourSide::Enclose);
      Contour out = choose_contour(z * std::polar(1.0, sign * 1e-3), n, ContourSide::Exclude);
      REQUIRE(in.encloses(z));
      REQUIRE_FALSE(out.encloses(z));
      LogComplex a = lc_add(lc_exp_zn(z, n), LogComplex::from_complex(cauchy_integral(z, in, kTol))).value;
      cplx b = cauchy_integral(z, out, kTol);
      worst = std::max(worst, std::abs(a.to_complex() - b));
    }
    CAPTURE(n);
    CHECK(worst <= 1e-8);
  }
}

TEST_CASE("analytic continuation from the outside matches E_1 + exp(z^n)") {
  std::mt19937_64 rng(9);
  for (int n : {2, 3}) {
    std::uniform_real_distribution<double> rad(0.2, 3.0), ang(-kPi / n * 0.95, kPi / n * 0.95);
    for (int k = 0; k < 20; ++k) {
      cplx z = std::polar(rad(rng), ang(rng));
      const double theta = std::abs(std::arg(z));
      const double lowest = kPi / (2.0 * n);
      Contour c;
      c.n = n;
      if (std::abs(z) <= 1.5) {
        // Indent around the disk: exp(w^n) on the arc stays moderate.
        c.half_angle = kPi / n;
        c.arc_radius = std::abs(z) + 0.5;
        c.arc = Contour::Arc::ThroughPositiveAxis;
      } else if (theta > lowest + 0.05) {
        // Rotate the upper ray below z, still inside the decay sector.
        c.half_angle = 0.5 * (theta + lowest);
      } else {
        continue;
      }
      REQUIRE_FALSE(c.encloses(z));
      cplx continued = cauchy_integral(z, c, kTol);
      LogComplex direct = lc_add(lc_exp_zn(z, n), LogComplex::from_complex(eval_E(z, n, kTol))).value;
      CAPTURE(z);
      REQUIRE(std::abs(continued - direct.to_complex()) <= 1e-8 * std::abs(continued));
    }
  }
}

TEST_CASE("conjugation symmetry of E and phi") {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> rad(0.1, 6.0), ang(-kPi, kPi);
  for (int n : {2, 3, 4}) {
    for (int k = 0; k < 15; ++k) {
      cplx z = std::polar(rad(rng), ang(rng));
      if (Contour::gamma(n).distance(z) < 1e-3) continue;
      cplx e = eval_E(z, n, kTol);
      cplx ec = eval_E(std::conj(z), n, kTol);
      REQUIRE(std::abs(ec - std::conj(e)) <= 1e-13 * std::max(1.0, std::abs(e)));
      cplx p = eval_phi(z, n, kTol).to_complex();
      cplx pc = eval_phi(std::conj(z), n, kTol).to_complex();
      REQUIRE(std::abs(pc - std::conj(p)) <= 1e-12 * std::max(1.0, std::abs(p)));
    }
  }
}

TEST_CASE("property: the rotated phi_j sum to exp(z^n)") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> rad(0.0, 3.0), ang(-kPi, kPi);
  for (int n : {2, 3, 4}) {
    for (int k = 0; k < 20; ++k) {
      cplx z = std::polar(rad(rng), ang(rng));
      LcAccumulator acc;
      for (int j = 1; j <= n; ++j) acc.add(eval_phi(root_of_unity_inverse(j, n) * z, n, kTol));
      LogComplex e = lc_exp_zn(z, n);
      double scale = std::max(1.0, std::exp(std::min(700.0, e.log_mod())));
      CAPTURE(n);
      CAPTURE(z);
      REQUIRE(std::abs(acc.value().to_complex() - e.to_complex()) <= 1e-9 * scale);
    }
  }
}

TEST_CASE("eval_E refuses points on Gamma") {
  CHECK_THROWS_AS(eval_E(std::polar(2.0, kPi / 2), 2, kTol), TooCloseToContour);
  CHECK_THROWS_AS(eval_E(0.0, 3, kTol), TooCloseToContour);
  CHECK_NOTHROW(eval_E(std::polar(2.0, kPi / 2 + 1e-3), 2, kTol));
  CHECK_THROWS_AS(eval_phi(1.0, 1, kTol), DomainError);
}

TEST_CASE("eval_f examples") {
  auto cf10 = demo_f(2, {poly({1.0}), poly({0.0})});
  double prev = 1e300;
  for (double r : {2.0, 3.0, 4.0}) {
    double mag = std::abs(direct_f(r * cf10.ray_direction(2), cf10));
    CHECK(mag < prev);
    prev = mag;
  }
  CHECK(prev < 1e-7);

  auto cf11 = demo_f(2, {poly({1.0}), poly({1.0})});
  cplx f0 = direct_f(0.0, cf11);
  CHECK(std::isfinite(f0.real()));
  CHECK(std::abs(f0 - 1.0) < 1e-10);
  for (double r : {1.0, 3.0, 5.0}) {
    CHECK(std::abs(direct_f(r * cf11.ray_direction(1), cf11) - 1.0) < 1e-10);
    CHECK(std::abs(direct_f(r * cf11.ray_direction(2), cf11) - 1.0) < 1e-10);
  }

  auto zero = demo_f(2, {poly({0.0}), poly({0.0})});
  CHECK(eval_f(cplx(3.0, 1.0), zero).value.is_zero());
}

TEST_CASE("eval_f against the n = 2 closed form") {
  // a_1 = 1, a_2 = z: f = 1 + (z - 1) phi(z) exp(-z^2).
  auto cf = demo_f(2, {poly({1.0}), poly({0.0, 1.0})});
  std::mt19937_64 rng(29);
  std::uniform_real_distribution<double> rad(0.1, 3.0), ang(-kPi, kPi);
  for (int k = 0; k < 30; ++k) {
    cplx z = std::polar(rad(rng), ang(rng));
    cplx expect = 1.0 + (z - 1.0) * phi2_oracle(z) * std::exp(-z * z);
    REQUIRE(std::abs(direct_f(z, cf) - expect) <= 1e-6 * std::abs(expect));
  }
}

TEST_CASE("eval_residual") {
  auto cf = demo_f(2, {poly({1.0}), poly({0.0, 1.0})});
  for (int j0 : {1, 2}) {
    double prev = 1e300;
    for (double r : {2.0, 3.0, 4.0}) {
      cplx z = r * cf.ray_direction(j0);
      LogComplex res = eval_residual(z, j0, cf);
      // Independent route: since sum_j phi_j = exp(z^n),
      // f - a_{j0} = sum_{j != j0} phi_j (a_j - a_{j0}) exp(-z^n).
      LcAccumulator oracle;
      for (int j = 1; j <= 2; ++j) {
        if (j == j0) continue;
        cplx diff = cf.target(j).eval(z) - cf.target(j0).eval(z);
        oracle.add(eval_phi(root_of_unity_inverse(j, 2) * z, 2, kTol) * LogComplex::from_complex(diff) *
                   lc_inv(lc_exp_zn(z, 2)));
      }
      CAPTURE(j0);
      CAPTURE(r);
      CHECK(std::abs(res.log_mod() - oracle.value().log_mod()) < 1e-9);
      CHECK(res.log_mod() < prev);
      prev = res.log_mod();
      if (r == 2.0) {
        // At r = 2 the residual is ~1e-3, so plain subtraction keeps ~13 digits.
        cplx plain = direct_f(z, cf) - cf.target(j0).eval(z);
        CHECK(std::abs(res.to_complex() - plain) < 1e-12);
      }
    }
    CHECK(prev / std::log(10.0) <= -6.0);
  }

  // Far out the residual is tiny yet still resolved in log scale.
  LogComplex far = eval_residual(10.0, 2, cf);
  CHECK(far.log10_abs() < -40.0);
  CHECK(std::isfinite(far.log_mod()));

  auto zero = demo_f(2, {poly({0.0}), poly({0.0})});
  CHECK(eval_residual(3.0, 2, zero).is_zero());
  CHECK_THROWS_AS(eval_residual(cplx(3.0, 0.1), 2, cf), NotOnRay);
}

TEST_CASE("residuals tend to zero on every ray for n = 3") {
  auto cf = demo_f(3, {poly({1.0}), poly({0.0, 1.0}), poly({2.0, 0.0, -1.0})});
  for (int j = 1; j <= 3; ++j) {
    double prev = 1e300;
    for (double r : {2.0, 4.0, 6.0}) {
      double lm = eval_residual(r * cf.ray_direction(j), j, cf).log_mod();
      CHECK(lm < prev);
      prev = lm;
    }
  }
}

TEST_CASE("ConstructedF validation") {
  CHECK_THROWS_AS(ConstructedF(1, {poly({1.0})}), DomainError);
  CHECK_THROWS_AS(ConstructedF(2, {poly({1.0})}), DomainError);
}
