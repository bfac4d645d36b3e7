#pragma once

#include <cstdint>
#include <vector>

#include "bignum.hpp"
#include "hspec.hpp"  // Triple
#include "power_series.hpp"

namespace recurselab {

// Fixed point of Takeuchi's triple recursion:
// if x <= y then y else if y <= z then z else x.
std::int64_t tak_simple(const Triple& t);

// Number of else-clause invocations under memoryless expansion, by the
// T recurrence (inner t values taken from tak_simple).
BigNat T_count(const Triple& t);

// Nonleaf-node count of the ternary expansion tree (the V recurrence).
BigNat V_count(const Triple& t);

// V(x, y, 0) as a confined-lattice-path count; requires x > y > 0.
BigNat V_closed(std::int64_t x, std::int64_t y);

// V in the wedge x > y, x >= z >= y: 1 + x - z + V(z-1, y, z).
BigNat V_wedge(const Triple& t);

// V_n = V(n+1, n, 0) and T_n = T(n, 0, n+1), indexed from n = 1.
struct Sequences {
  std::vector<BigNat> vn;
  std::vector<BigNat> tn;
};
Sequences sequences(std::int64_t n_max);

// Else-expansions of the call-by-need evaluation of t at the triple.
BigNat K_count_lazy(const Triple& t);

// The three closed forms of the call-by-need count:
// 0 if x <= y; x-y if x > y <= z; (x-y)(y-z) if x > y > z+1;
// (x-y)(x-y+3)/2 if x > y = z+1.
BigNat K_closed(const Triple& t);

struct BoundsRow {
  std::int64_t n;
  bool bell_le_tn;      // bell(n) <= T_n
  bool tn_lt_3fact;     // T_n < 3 n!
  bool vn1_le_4n;       // V_{n+1} <= 4^n
};
std::vector<BoundsRow> bounds_check(std::int64_t n_max);

// Residual of T(z) = (C(z)-1)/(1-z) + z (2-C(z))/sqrt(1-4z) * T(z C(z)),
// truncated at `order`; the zero series when the functional equation holds.
PowerSeries gf_functional_equation_residual(std::int64_t order);

// Residual of V(z) = (C(z)-1)/(1-z) against the V_n coefficients.
PowerSeries v_series_identity_residual(std::int64_t order);

// | (V_n 4^-n) / (4 n^{-3/2} / (3 sqrt(pi))) - 1 |, from exact V_n.
double darboux_relative_error(std::int64_t n);

}  // namespace recurselab
