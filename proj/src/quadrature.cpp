#include "asymfun/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <string>
#include <vector>

#include "asymfun/errors.hpp"

namespace asymfun {
namespace {

// Kronrod abscissae on [-1, 1] (positive half, descending) and weights;
// odd indices are also the 7-point Gauss abscissae.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

constexpr double kEps = std::numeric_limits<double>::epsilon();

struct Panel {
  cplx a, b;
  cplx value;
  double err = 0.0;
  double resabs = 0.0;
  int depth = 0;
};

struct WorseFirst {
  bool operator()(const Panel& x, const Panel& y) const { return x.err < y.err; }
};

Panel gk15(const ComplexIntegrand& f, cplx a, cplx b, int depth) {
  const cplx center = 0.5 * (a + b);
  const cplx half = 0.5 * (b - a);
  const double habs = std::abs(half);

  std::array<cplx, 7> f1{}, f2{};
  const cplx fc = f(center);
  cplx resk = fc * kWgk[7];
  cplx resg = fc * kWg[3];
  double resabs = std::abs(fc) * kWgk[7];
  for (int j = 0; j < 7; ++j) {
    const cplx dx = half * kXgk[j];
    f1[j] = f(center - dx);
    f2[j] = f(center + dx);
    const cplx sum = f1[j] + f2[j];
    resk += kWgk[j] * sum;
    resabs += kWgk[j] * (std::abs(f1[j]) + std::abs(f2[j]));
    if (j % 2 == 1) resg += kWg[j / 2] * sum;
  }
  const cplx mean = 0.5 * resk;
  double resasc = kWgk[7] * std::abs(fc - mean);
  for (int j = 0; j < 7; ++j) {
    resasc += kWgk[j] * (std::abs(f1[j] - mean) + std::abs(f2[j] - mean));
  }

  Panel p;
  p.a = a;
  p.b = b;
  p.depth = depth;
  p.value = resk * half;
  resabs *= habs;
  resasc *= habs;
  double err = std::abs((resk - resg) * half);
  if (resasc != 0.0 && err != 0.0) {
    err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  }
  if (resabs > std::numeric_limits<double>::min() / (50.0 * kEps)) {
    err = std::max(50.0 * kEps * resabs, err);
  }
  p.err = err;
  p.resabs = resabs;
  return p;
}

}  // namespace

QuadResult integrate_segment(const ComplexIntegrand& integrand, cplx a, cplx b, double tol,
                             const QuadOptions& opts) {
  if (!(tol > 0.0)) throw DomainError("integrate_segment: tol must be positive");
  QuadResult out;
  if (a == b) return out;

  std::priority_queue<Panel, std::vector<Panel>, WorseFirst> heap;
  const int pieces = std::max(1, opts.initial_panels);
  for (int k = 0; k < pieces; ++k) {
    cplx pa = a + (b - a) * (static_cast<double>(k) / pieces);
    cplx pb = (k + 1 == pieces) ? b : a + (b - a) * (static_cast<double>(k + 1) / pieces);
    heap.push(gk15(integrand, pa, pb, 0));
    out.evaluations += kPanelEvaluations;
  }

  auto totals = [&heap](cplx& value, double& err, double& resabs) {
    // priority_queue has no iteration; copy the underlying container.
    auto copy = heap;
    value = 0.0;
    err = 0.0;
    resabs = 0.0;
    while (!copy.empty()) {
      value += copy.top().value;
      err += copy.top().err;
      resabs += copy.top().resabs;
      copy.pop();
    }
  };

  cplx value;
  double err = 0.0, resabs = 0.0;
  totals(value, err, resabs);
  // Running sums between exact recomputations.
  double run_err = err;
  double run_resabs = resabs;
  for (;;) {
    const double floor = 100.0 * kEps * run_resabs;
    if (run_err <= std::max(tol, floor)) {
      totals(value, err, resabs);
      if (err <= std::max(tol, 100.0 * kEps * resabs)) break;
      run_err = err;
      run_resabs = resabs;
    }
    Panel worst = heap.top();
    if (worst.depth >= opts.max_depth) {
      throw NonconvergenceError("integrate_segment: subdivision depth cap reached (error " +
                                std::to_string(run_err) + " > tol " + std::to_string(tol) + ")");
    }
    if (out.evaluations + 2 * kPanelEvaluations > opts.max_evaluations) {
      throw NonconvergenceError("integrate_segment: evaluation budget exhausted");
    }
    heap.pop();
    const cplx mid = 0.5 * (worst.a + worst.b);
    Panel left = gk15(integrand, worst.a, mid, worst.depth + 1);
    Panel right = gk15(integrand, mid, worst.b, worst.depth + 1);
    out.evaluations += 2 * kPanelEvaluations;
    run_err += left.err + right.err - worst.err;
    run_resabs += left.resabs + right.resabs - worst.resabs;
    heap.push(left);
    heap.push(right);
  }

  out.value = value;
  out.err_est = err;
  return out;
}

double decaying_tail_bound(int n, double T, double rate) {
  // For t >= T >= 1: t^n >= T^(n-1) t, so the tail is at most
  //   int_T^inf (t+1) exp(-a t) dt = exp(-a T) ((T+1)/a + 1/a^2),  a = rate T^(n-1).
  const double a = rate * std::pow(T, n - 1);
  return std::exp(-a * T) * ((T + 1.0) / a + 1.0 / (a * a));
}

double truncation_radius(int n, double tol, double rate) {
  if (n < 1) throw DomainError("truncation_radius: n must be >= 1");
  if (!(tol > 0.0)) throw DomainError("truncation_radius: tol must be positive");
  if (!(rate > 0.0)) throw DomainError("truncation_radius: rate must be positive");
  const double target = tol / 10.0;
  double lo = 1.0;
  if (decaying_tail_bound(n, lo, rate) < target) return lo;
  double hi = 2.0;
  while (decaying_tail_bound(n, hi, rate) >= target) {
    lo = hi;
    hi *= 2.0;
    if (hi > 1e12) throw DomainError("truncation_radius: tolerance unreachable");
  }
  // The bound is decreasing in T on [1, inf), so bisection keeps the answer
  // monotone in tol.
  while (hi - lo > 1e-6 * hi) {
    const double mid = 0.5 * (lo + hi);
    if (decaying_tail_bound(n, mid, rate) < target) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

QuadResult integrate_decaying_ray(const ComplexIntegrand& integrand, cplx origin, cplx direction,
                                  int n, double tol, double scale, double rate) {
  if (!(scale > 0.0)) throw DomainError("integrate_decaying_ray: scale must be positive");
  const cplx dir = direction / std::abs(direction);
  const double T = truncation_radius(n, tol / scale, rate);
  QuadOptions opts;
  opts.initial_panels = std::max(4, static_cast<int>(std::ceil(2.0 * T)));
  QuadResult r = integrate_segment(integrand, origin, origin + T * dir, tol, opts);
  r.err_est += scale * decaying_tail_bound(n, T, rate);
  return r;
}

}  // namespace asymfun
