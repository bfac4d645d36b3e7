#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "bignum.hpp"
#include "eval_core.hpp"

namespace recurselab {

using MTuple = std::vector<std::int64_t>;

// Smallest k >= 1 with x_1 > ... > x_k <= x_{k+1} (1-based), or nullopt when
// the tuple is strictly decreasing throughout.
std::optional<std::size_t> first_rise(std::span<const std::int64_t> xs);

// x_{k+1} at the first rise, else x_1.
std::int64_t u_function(std::span<const std::int64_t> xs);

// g_j auxiliaries, j = xs.size() >= 2:
// j = 2 -> x_2; x_1 = x_2+1 -> g_{j-1}(x_2..x_j);
// x_2 = x_3+1 -> max(x_3, x_j); else x_j.
std::int64_t g_aux(std::span<const std::int64_t> xs);

// Fixed point of the m-dimensional recursion: g_{k+1}(x_1..x_{k+1}) at the
// first rise, else x_1. Requires m >= 3.
std::int64_t f_m(std::span<const std::int64_t> xs);

// Checks f_m(y_1..y_m) = f_m(x_1..x_m), with
// y_i = f_m(x_i - 1, x_{i+1}, ..., x_m, x_1, ..., x_{i-1}),
// for every tuple in [lo..hi]^m with x_1 > x_2. Returns the first
// counterexample, or nullopt when the identity holds on the whole box.
std::optional<MTuple> theorem4_verify(int m, std::int64_t lo, std::int64_t hi);

// Call-by-need evaluation of the m-dimensional recursion (m = xs.size()).
EvalOutcome takm_lazy(const MTuple& xs, const BigNat& fuel);

// Cost of memoryless full expansion. By default computes the T recurrence
// (inner tuple taken at f_m values) with memoization:
//   value = f_m(xs), elseExpansions = T(xs), totalExpansions = 1 + (m+1) T(xs),
//   fuel charged per distinct recurrence entry.
// With raw = true, performs genuinely nested full expansion instead, charging
// fuel per body entry; termination for m > 3 is an open question either way,
// so FuelExhausted is an honest answer.
EvalOutcome takm_full_cost(const MTuple& xs, const BigNat& fuel, bool raw = false);

}  // namespace recurselab
