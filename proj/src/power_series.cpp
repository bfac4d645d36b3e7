#include "power_series.hpp"

#include <stdexcept>

#include "combinatorics.hpp"

namespace recurselab {

PowerSeries::PowerSeries(std::int64_t order) : order_(order) {
  if (order < 1) throw std::invalid_argument("PowerSeries: order must be >= 1");
  coeffs_.resize(static_cast<std::size_t>(order));
}

PowerSeries::PowerSeries(std::vector<BigInt> coeffs, std::int64_t order)
    : coeffs_(std::move(coeffs)), order_(order) {
  if (order < 1) throw std::invalid_argument("PowerSeries: order must be >= 1");
  coeffs_.resize(static_cast<std::size_t>(order));
}

const BigInt& PowerSeries::coeff(std::int64_t n) const {
  if (n < 0 || n >= order_)
    throw std::out_of_range("PowerSeries::coeff: index past truncation order");
  return coeffs_[static_cast<std::size_t>(n)];
}

void PowerSeries::set_coeff(std::int64_t n, BigInt v) {
  if (n < 0 || n >= order_)
    throw std::out_of_range("PowerSeries::set_coeff: index past truncation order");
  coeffs_[static_cast<std::size_t>(n)] = std::move(v);
}

bool PowerSeries::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

static std::int64_t common_order(const PowerSeries& a, const PowerSeries& b) {
  return std::min(a.order(), b.order());
}

PowerSeries PowerSeries::operator+(const PowerSeries& o) const {
  std::int64_t n = common_order(*this, o);
  PowerSeries r(n);
  for (std::int64_t i = 0; i < n; ++i) r.set_coeff(i, coeff(i) + o.coeff(i));
  return r;
}

PowerSeries PowerSeries::operator-(const PowerSeries& o) const {
  std::int64_t n = common_order(*this, o);
  PowerSeries r(n);
  for (std::int64_t i = 0; i < n; ++i) r.set_coeff(i, coeff(i) - o.coeff(i));
  return r;
}

PowerSeries PowerSeries::operator*(const PowerSeries& o) const {
  std::int64_t n = common_order(*this, o);
  PowerSeries r(n);
  for (std::int64_t i = 0; i < n; ++i) {
    BigInt s = 0;
    for (std::int64_t j = 0; j <= i; ++j) s += coeff(j) * o.coeff(i - j);
    r.set_coeff(i, std::move(s));
  }
  return r;
}

PowerSeries PowerSeries::shift(std::int64_t k) const {
  if (k < 0) throw std::invalid_argument("PowerSeries::shift: negative shift");
  PowerSeries r(order_);
  for (std::int64_t i = k; i < order_; ++i) r.set_coeff(i, coeff(i - k));
  return r;
}

PowerSeries PowerSeries::compose(const PowerSeries& inner) const {
  if (inner.coeff(0) != 0)
    throw std::invalid_argument(
        "PowerSeries::compose: inner series must have zero constant term");
  std::int64_t n = common_order(*this, inner);
  // Horner evaluation: result = c_0 + inner * (c_1 + inner * (...))
  PowerSeries r = PowerSeries::constant(0, n);
  for (std::int64_t i = n - 1; i >= 0; --i) {
    r = r * inner + PowerSeries::constant(coeff(i), n);
  }
  return r;
}

PowerSeries PowerSeries::constant(const BigInt& c, std::int64_t order) {
  PowerSeries r(order);
  r.set_coeff(0, c);
  return r;
}

PowerSeries PowerSeries::identity(std::int64_t order) {
  PowerSeries r(order);
  if (order > 1) r.set_coeff(1, 1);
  return r;
}

PowerSeries PowerSeries::geometric(std::int64_t order) {
  PowerSeries r(order);
  for (std::int64_t i = 0; i < order; ++i) r.set_coeff(i, 1);
  return r;
}

PowerSeries catalan_series(std::int64_t order) {
  PowerSeries r(order);
  for (std::int64_t i = 0; i < order; ++i) r.set_coeff(i, catalan(i));
  return r;
}

PowerSeries central_binomial_series(std::int64_t order) {
  PowerSeries r(order);
  for (std::int64_t i = 0; i < order; ++i) r.set_coeff(i, binomial(2 * i, i));
  return r;
}

}  // namespace recurselab
