#include "asymfun/power_series.hpp"

#include <cmath>
#include <string>

#include "asymfun/errors.hpp"

namespace asymfun {

PowerSeries PowerSeries::polynomial(std::vector<cplx> coefficients) {
  PowerSeries p;
  p.coeffs_ = std::move(coefficients);
  return p;
}

PowerSeries PowerSeries::series(std::vector<cplx> coefficients, double tail_bound_radius) {
  if (coefficients.empty()) throw DomainError("series: at least one coefficient required");
  if (!(tail_bound_radius > 0.0)) throw DomainError("series: tail_bound_radius must be positive");
  PowerSeries p;
  p.coeffs_ = std::move(coefficients);
  p.tail_radius_ = tail_bound_radius;
  p.polynomial_ = false;
  p.order_.reset();
  return p;
}

int PowerSeries::degree() const {
  for (int k = static_cast<int>(coeffs_.size()) - 1; k >= 0; --k) {
    if (coeffs_[static_cast<std::size_t>(k)] != cplx(0.0, 0.0)) return k;
  }
  return -1;
}

cplx PowerSeries::eval(cplx z) const {
  if (!polynomial_ && std::abs(z) > tail_radius_) {
    throw DomainError("series evaluated at |z| = " + std::to_string(std::abs(z)) +
                      " beyond its certified radius " + std::to_string(tail_radius_));
  }
  cplx acc(0.0, 0.0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

LogComplex PowerSeries::eval_log(cplx z) const { return LogComplex::from_complex(eval(z)); }

double PowerSeries::tail_bound(double r) const {
  if (polynomial_) return 0.0;
  const std::size_t last = coeffs_.size() - 1;
  return std::abs(coeffs_[last]) * std::pow(r, static_cast<double>(last));
}

bool PowerSeries::has_real_coefficients() const {
  for (const cplx& c : coeffs_) {
    if (c.imag() != 0.0) return false;
  }
  return true;
}

}  // namespace asymfun
