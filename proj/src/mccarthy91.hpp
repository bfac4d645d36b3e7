#pragma once

#include <cstdint>

#include "bignum.hpp"

namespace recurselab {

// Parameters of the generalized scheme
//   f(x) = if x > a then x - b else f^c(x + d)
// with b, d > 0 rational and c >= 1 integer.
struct Gen91Params {
  Rational a;
  Rational b;
  std::int64_t c = 1;
  Rational d;

  Rational delta() const { return d - Rational(c - 1) * b; }
  void validate() const;  // throws std::invalid_argument on bad parameters

  bool operator==(const Gen91Params&) const = default;
};

// The scheme defines a total function iff (c - 1) b < d.
bool gen91_is_total(const Gen91Params& p);

// Closed form of the total generalized scheme:
//   x - b                                          if x > a
//   a + d - c b - ((a - x) mod (d - (c-1) b))      otherwise
// Rejects non-total parameter sets.
Rational gen91_closed(const Gen91Params& p, const Rational& x);

// Iterates the simplified recurrence f(x) = if x > a then x - b
// else f(x + d - (c-1) b). Throws FuelExhaustedError if the budget runs out
// (which happens whenever delta <= 0).
Rational gen91_simplified(const Gen91Params& p, Rational x, const BigNat& fuel);

// Number of times the top-level test is performed when the 91 function is
// computed by memoryless expansion of the f^91(x+901) definition:
// 1 if x > 100, else 9192 - 91 x.
BigNat f91_cost_closed(std::int64_t x);

// The same count computed by its own recurrence,
//   F(x) = if x > 100 then 1 else 1 + sum_{k=0}^{90} F(f^k(x + 901)),
// with memoized f values from the f^91 definition. `floor` bounds the
// memoization domain from below.
BigNat f91_cost_recurrence(std::int64_t x, std::int64_t floor = -1000000);

// Memoized value of the f^91(x+901) form of the 91 function.
std::int64_t mc91_modified_value(std::int64_t x);

}  // namespace recurselab
