#include "mccarthy91.hpp"

#include <stdexcept>
#include <unordered_map>

#include "errors.hpp"

namespace recurselab {

void Gen91Params::validate() const {
  if (b <= 0) throw std::invalid_argument("Gen91Params: b must be > 0");
  if (d <= 0) throw std::invalid_argument("Gen91Params: d must be > 0");
  if (c < 1) throw std::invalid_argument("Gen91Params: c must be >= 1");
}

bool gen91_is_total(const Gen91Params& p) {
  p.validate();
  return Rational(p.c - 1) * p.b < p.d;
}

Rational gen91_closed(const Gen91Params& p, const Rational& x) {
  if (!gen91_is_total(p))
    throw std::invalid_argument("gen91_closed: parameters are not total");
  if (x > p.a) return x - p.b;
  return p.a + p.d - Rational(p.c) * p.b - rational_mod(p.a - x, p.delta());
}

Rational gen91_simplified(const Gen91Params& p, Rational x, const BigNat& fuel) {
  p.validate();
  Rational delta = p.delta();
  BigNat left = fuel;
  while (true) {
    if (left == 0) throw FuelExhaustedError("gen91_simplified: fuel exhausted");
    --left;
    if (x > p.a) return x - p.b;
    x += delta;
  }
}

BigNat f91_cost_closed(std::int64_t x) {
  if (x > 100) return 1;
  return BigNat(9192) - BigNat(91) * x;
}

std::int64_t mc91_modified_value(std::int64_t x) {
  static thread_local std::unordered_map<std::int64_t, std::int64_t> memo;
  if (x > 100) return x - 10;
  auto it = memo.find(x);
  if (it != memo.end()) return it->second;
  std::int64_t v = x + 901;
  for (int k = 0; k < 91; ++k) v = mc91_modified_value(v);
  memo.emplace(x, v);
  return v;
}

BigNat f91_cost_recurrence(std::int64_t x, std::int64_t floor) {
  if (x < floor)
    throw std::invalid_argument("f91_cost_recurrence: argument below floor");
  static thread_local std::unordered_map<std::int64_t, BigNat> memo;
  if (x > 100) return 1;
  auto it = memo.find(x);
  if (it != memo.end()) return it->second;
  BigNat s = 1;
  std::int64_t y = x + 901;
  for (int k = 0; k <= 90; ++k) {
    s += f91_cost_recurrence(y, floor);
    y = mc91_modified_value(y);
  }
  memo.emplace(x, s);
  return s;
}

}  // namespace recurselab
