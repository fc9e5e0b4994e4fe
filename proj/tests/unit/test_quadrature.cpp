#include <cmath>
#include <random>

#include "asymfun/errors.hpp"
#include "asymfun/quadrature.hpp"
#include "doctest.h"

using namespace asymfun;

namespace {

// Composite Simpson on [a, b] with m panels; test-side oracle only.
double simpson(double (*f)(double), double a, double b, int m) {
  const double h = (b - a) / m;
  double s = f(a) + f(b);
  for (int k = 1; k < m; ++k) s += f(a + k * h) * (k % 2 ? 4.0 : 2.0);
  return s * h / 3.0;
}

}  // namespace

TEST_CASE("integrate_segment examples") {
  auto one = integrate_segment([](cplx) { return cplx(1.0, 0.0); }, 0.0, cplx(1.0, 1.0), 1e-12);
  CHECK(std::abs(one.value - cplx(1.0, 1.0)) < 1e-15);
  CHECK(one.evaluations >= kPanelEvaluations);

  auto lin = integrate_segment([](cplx w) { return w; }, 0.0, 2.0, 1e-12);
  CHECK(std::abs(lin.value - 2.0) < 1e-15);

  // Gaussian: oracle is composite Simpson with 2e5 panels.
  auto gauss_oracle = simpson([](double x) { return std::exp(-x * x); }, 0.0, 10.0, 200000);
  CHECK(std::abs(gauss_oracle - std::sqrt(kPi) / 2) < 1e-12);
  auto g = integrate_segment([](cplx w) { return std::exp(-w * w); }, 0.0, 10.0, 1e-12);
  CHECK(std::abs(g.value - gauss_oracle) < 1e-10);
  CHECK(g.err_est >= 0.0);
}

TEST_CASE("polynomials up to degree 13 are exact on one panel") {
  for (int deg = 0; deg <= 13; ++deg) {
    auto r = integrate_segment([deg](cplx w) { return std::pow(w, deg); }, cplx(-1.0, 0.5),
                               cplx(2.0, -1.0), 1e-10);
    cplx exact = (std::pow(cplx(2.0, -1.0), deg + 1) - std::pow(cplx(-1.0, 0.5), deg + 1)) /
                 static_cast<double>(deg + 1);
    CAPTURE(deg);
    CHECK(r.evaluations == kPanelEvaluations);
    CHECK(std::abs(r.value - exact) <= 1e-13 * std::max(1.0, std::abs(exact)));
  }
}

TEST_CASE("property: additivity and reversal antisymmetry") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  auto f = [](cplx w) { return std::exp(w) * std::cos(3.0 * w) / (w + cplx(0.0, 5.0)); };
  for (int k = 0; k < 50; ++k) {
    cplx a(u(rng), u(rng)), c(u(rng), u(rng));
    double s = (u(rng) + 2.0) / 4.0;
    cplx b = a + s * (c - a);
    auto ac = integrate_segment(f, a, c, 1e-12);
    auto ab = integrate_segment(f, a, b, 1e-12);
    auto bc = integrate_segment(f, b, c, 1e-12);
    REQUIRE(std::abs(ac.value - (ab.value + bc.value)) <= ac.err_est + ab.err_est + bc.err_est + 1e-14);
    auto ca = integrate_segment(f, c, a, 1e-12);
    REQUIRE(std::abs(ca.value + ac.value) <= 1e-14);
  }
}

TEST_CASE("nonconvergence is reported") {
  // 1/sqrt|x| is integrable, but with a tiny depth cap the rule cannot
  // resolve the endpoint singularity.
  QuadOptions opts;
  opts.max_depth = 3;
  auto f = [](cplx w) { return 1.0 / std::sqrt(std::abs(w.real()) + 1e-300); };
  CHECK_THROWS_AS(integrate_segment(f, 0.0, 1.0, 1e-12, opts), NonconvergenceError);
  CHECK_THROWS_AS(integrate_segment(f, 0.0, 1.0, -1.0), DomainError);
}

TEST_CASE("truncation_radius") {
  // Oracle: direct quadrature of the tail (t+1) e^{-t^2} beyond T.
  double T2 = truncation_radius(2, 1e-12);
  CHECK(T2 <= 7.0);
  auto tail2 = integrate_segment([](cplx t) { return (t + 1.0) * std::exp(-t * t); }, T2, 40.0, 1e-30);
  CHECK(tail2.value.real() < 1e-13);

  double T1 = truncation_radius(1, 1e-6);
  CHECK(T1 <= 20.5);
  CHECK((T1 + 2.0) * std::exp(-T1) < 1e-7);

  double prev = 0.0;
  for (double tol : {1e-2, 1e-4, 1e-8, 1e-12, 1e-16}) {
    double T = truncation_radius(3, tol);
    CHECK(T >= prev);
    prev = T;
  }
}

TEST_CASE("integrate_decaying_ray examples") {
  auto e1 = integrate_decaying_ray([](cplx w) { return std::exp(-std::abs(w)); }, 0.0, 1.0, 1, 1e-10);
  CHECK(std::abs(e1.value - 1.0) < 1e-8);

  auto g = integrate_decaying_ray([](cplx w) { return std::exp(w * w); }, 0.0, cplx(0.0, 1.0), 2, 1e-12);
  CHECK(std::abs(g.value - cplx(0.0, std::sqrt(kPi) / 2)) < 1e-9);

  auto d2 = integrate_decaying_ray(
      [](cplx w) {
        double t = std::abs(w);
        return cplx(t * std::exp(-t * t), 0.0);
      },
      0.0, 1.0, 2, 1e-12);
  CHECK(std::abs(d2.value - 0.5) < 1e-10);
  CHECK(d2.err_est > 0.0);
}
