#pragma once

#include <cstdint>
#include <vector>

#include "bignum.hpp"

namespace recurselab {

// Truncated formal power series with exact integer coefficients.
// A series of order N holds coefficients for z^0 .. z^{N-1}; no operation
// ever reads or produces a coefficient at or beyond N.
class PowerSeries {
 public:
  explicit PowerSeries(std::int64_t order);
  PowerSeries(std::vector<BigInt> coeffs, std::int64_t order);

  std::int64_t order() const { return order_; }
  const BigInt& coeff(std::int64_t n) const;
  void set_coeff(std::int64_t n, BigInt v);
  const std::vector<BigInt>& coeffs() const { return coeffs_; }

  bool is_zero() const;

  PowerSeries operator+(const PowerSeries& o) const;
  PowerSeries operator-(const PowerSeries& o) const;
  PowerSeries operator*(const PowerSeries& o) const;

  // Multiply by z^k (shift coefficients up, dropping ones past the order).
  PowerSeries shift(std::int64_t k) const;

  // Composition this(inner); inner must have zero constant term.
  PowerSeries compose(const PowerSeries& inner) const;

  static PowerSeries constant(const BigInt& c, std::int64_t order);
  static PowerSeries identity(std::int64_t order);  // the series z
  // 1 / (1 - z) = 1 + z + z^2 + ...
  static PowerSeries geometric(std::int64_t order);

 private:
  std::vector<BigInt> coeffs_;
  std::int64_t order_;
};

// Coefficients C_0, C_1, ..., C_{N-1}.
PowerSeries catalan_series(std::int64_t order);

// Coefficients binomial(2n, n): the series of 1 / sqrt(1 - 4z).
PowerSeries central_binomial_series(std::int64_t order);

}  // namespace recurselab
