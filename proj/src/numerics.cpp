#include "asymfun/numerics.hpp"

#include <cmath>
#include <limits>

namespace asymfun {

double normalize_arg(double arg) {
  if (!std::isfinite(arg)) return arg;
  double x = std::remainder(arg, kTwoPi);
  if (x <= -kPi) x += kTwoPi;
  if (x > kPi) x -= kTwoPi;
  return x;
}

LogComplex LogComplex::from_log_polar(double log_mod, double arg) {
  LogComplex out;
  out.zero_ = false;
  out.log_mod_ = log_mod;
  out.arg_ = normalize_arg(arg);
  return out;
}

LogComplex LogComplex::from_complex(cplx z) {
  if (z == cplx(0.0, 0.0)) return {};
  return from_log_polar(std::log(std::abs(z)), std::arg(z));
}

double LogComplex::log_mod() const {
  return zero_ ? -std::numeric_limits<double>::infinity() : log_mod_;
}

double LogComplex::log10_abs() const {
  return zero_ ? -std::numeric_limits<double>::infinity() : log_mod_ / std::log(10.0);
}

cplx LogComplex::to_complex() const {
  if (zero_) return {0.0, 0.0};
  return std::polar(std::exp(log_mod_), arg_);
}

LogComplex lc_mul(const LogComplex& a, const LogComplex& b) {
  if (a.is_zero() || b.is_zero()) return {};
  return LogComplex::from_log_polar(a.log_mod() + b.log_mod(), a.arg() + b.arg());
}

LogComplex lc_inv(const LogComplex& a) {
  if (a.is_zero()) {
    return LogComplex::from_log_polar(std::numeric_limits<double>::infinity(), 0.0);
  }
  return LogComplex::from_log_polar(-a.log_mod(), -a.arg());
}

LogComplex lc_div(const LogComplex& a, const LogComplex& b) { return lc_mul(a, lc_inv(b)); }

LogComplex lc_neg(const LogComplex& a) {
  if (a.is_zero()) return a;
  return LogComplex::from_log_polar(a.log_mod(), a.arg() + kPi);
}

LcSum lc_add(const LogComplex& a, const LogComplex& b) {
  if (a.is_zero()) return {b, false};
  if (b.is_zero()) return {a, false};

  // Order the operands by a total order so that a+b and b+a run the same
  // arithmetic.
  bool a_big = a.log_mod() > b.log_mod() ||
               (a.log_mod() == b.log_mod() && a.arg() >= b.arg());
  const LogComplex& big = a_big ? a : b;
  const LogComplex& small = a_big ? b : a;

  double scale = std::exp(small.log_mod() - big.log_mod());
  double dtheta = small.arg() - big.arg();
  double re = scale * std::cos(dtheta);
  double im = scale * std::sin(dtheta);

  // |1 + r|^2 = 1 + 2 Re r + |r|^2
  double s_re = 1.0 + re;
  if (s_re == 0.0 && im == 0.0) return {LogComplex::zero(), true};
  double mod_s = std::hypot(s_re, im);
  if (!(mod_s > 0.0)) return {LogComplex::zero(), true};
  // For scale >= 1/2, 1 + re is exact (Sterbenz) and hypot keeps the digits
  // that survive cancellation; below that log1p is the accurate form.
  double log_abs_s = scale < 0.5 ? 0.5 * std::log1p(2.0 * re + scale * scale) : std::log(mod_s);

  LcSum out;
  out.value = LogComplex::from_log_polar(big.log_mod() + log_abs_s, big.arg() + std::atan2(im, s_re));
  out.cancellation = mod_s < kCancellationRatio;
  return out;
}

LcSum lc_sub(const LogComplex& a, const LogComplex& b) { return lc_add(a, lc_neg(b)); }

cplx ipow(cplx z, int n) {
  cplx result(1.0, 0.0);
  cplx base = z;
  unsigned e = static_cast<unsigned>(n < 0 ? -n : n);
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e) base *= base;
  }
  return n < 0 ? cplx(1.0, 0.0) / result : result;
}

LogComplex lc_exp_zn(cplx z, int n) {
  cplx w = ipow(z, n);
  return LogComplex::from_log_polar(w.real(), w.imag());
}

void LcAccumulator::add(const LogComplex& term) {
  LcSum s = lc_add(sum_, term);
  sum_ = s.value;
  cancellation_ = cancellation_ || s.cancellation;
}

}  // namespace asymfun
