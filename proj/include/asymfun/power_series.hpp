#pragma once

#include <limits>
#include <optional>
#include <vector>

#include "asymfun/numerics.hpp"

namespace asymfun {

/// Truncated power series sum_k c_k z^k. A polynomial is the special case
/// with an infinite tail radius and no tail.
///
/// For a genuine series the caller certifies that on |z| <= tail_bound_radius
/// the omitted tail is no larger than the last kept term, which is what
/// tail_bound() reports.
class PowerSeries {
 public:
  PowerSeries() = default;

  static PowerSeries polynomial(std::vector<cplx> coefficients);
  static PowerSeries series(std::vector<cplx> coefficients, double tail_bound_radius);

  const std::vector<cplx>& coefficients() const { return coeffs_; }
  bool is_polynomial() const { return polynomial_; }
  double tail_bound_radius() const { return tail_radius_; }

  /// Degree of the highest nonzero coefficient; -1 for the zero polynomial.
  int degree() const;

  /// Horner evaluation. Throws DomainError outside the certified radius.
  cplx eval(cplx z) const;
  LogComplex eval_log(cplx z) const;

  /// Magnitude of the last kept term at radius |z|; 0 for polynomials.
  double tail_bound(double r) const;

  /// Declared growth order: 0 for polynomials, unknown for series unless set.
  std::optional<double> declared_order() const { return order_; }
  void set_declared_order(std::optional<double> order) { order_ = order; }

  /// True when every coefficient is real, so the function commutes with
  /// conjugation.
  bool has_real_coefficients() const;

 private:
  std::vector<cplx> coeffs_;
  double tail_radius_ = std::numeric_limits<double>::infinity();
  bool polynomial_ = true;
  std::optional<double> order_ = 0.0;
};

}  // namespace asymfun
