#pragma once

#include <complex>

namespace asymfun {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr double kTwoPi = 2.0 * kPi;

/// Reduce an angle to (-pi, pi].
double normalize_arg(double arg);

/// Complex number held as (log|z|, arg z) so that values like exp(r^n) with
/// r^n far beyond 700 stay representable. Zero is a separate state rather
/// than log_mod = -inf, which keeps arg free of NaNs.
class LogComplex {
 public:
  /// The zero value.
  constexpr LogComplex() = default;

  static LogComplex zero() { return {}; }
  static LogComplex from_log_polar(double log_mod, double arg);
  static LogComplex from_complex(cplx z);
  static LogComplex from_real(double x) { return from_complex(cplx(x, 0.0)); }

  bool is_zero() const { return zero_; }
  /// Natural log of the modulus; -inf for zero.
  double log_mod() const;
  /// Argument in (-pi, pi]; 0 for zero.
  double arg() const { return arg_; }
  double log10_abs() const;

  /// Ordinary complex value. Overflows to inf / underflows to 0 outside the
  /// double range.
  cplx to_complex() const;

  friend bool operator==(const LogComplex&, const LogComplex&) = default;

 private:
  bool zero_ = true;
  double log_mod_ = 0.0;
  double arg_ = 0.0;
};

/// Result of a log-space addition. `cancellation` is raised when
/// |a+b| / max(|a|,|b|) < kCancellationRatio; the value is still the best
/// double-precision answer but has lost most of its significant digits.
struct LcSum {
  LogComplex value;
  bool cancellation = false;
};

inline constexpr double kCancellationRatio = 1e-10;

LogComplex lc_mul(const LogComplex& a, const LogComplex& b);
LogComplex lc_div(const LogComplex& a, const LogComplex& b);
LogComplex lc_inv(const LogComplex& a);
LcSum lc_add(const LogComplex& a, const LogComplex& b);
LcSum lc_sub(const LogComplex& a, const LogComplex& b);
LogComplex lc_neg(const LogComplex& a);

/// exp(z^n) as (Re z^n, Im z^n reduced).
LogComplex lc_exp_zn(cplx z, int n);

/// z^n by repeated squaring; exact integer powers avoid the log/exp round
/// trip of std::pow.
cplx ipow(cplx z, int n);

inline LogComplex operator*(const LogComplex& a, const LogComplex& b) { return lc_mul(a, b); }
inline LogComplex operator/(const LogComplex& a, const LogComplex& b) { return lc_div(a, b); }
inline LogComplex operator+(const LogComplex& a, const LogComplex& b) { return lc_add(a, b).value; }
inline LogComplex operator-(const LogComplex& a, const LogComplex& b) { return lc_sub(a, b).value; }

/// Accumulates a sum of LogComplex terms and remembers whether any partial
/// sum triggered a cancellation report.
class LcAccumulator {
 public:
  void add(const LogComplex& term);
  const LogComplex& value() const { return sum_; }
  bool cancellation() const { return cancellation_; }

 private:
  LogComplex sum_;
  bool cancellation_ = false;
};

}  // namespace asymfun
