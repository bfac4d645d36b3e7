#pragma once

#include <cstdint>

#include "bignum.hpp"

namespace recurselab {

// binomial(n, k) with the convention that it is 0 outside 0 <= k <= n.
BigNat binomial(std::int64_t n, std::int64_t k);

BigNat factorial(std::int64_t n);

// Catalan number C_n = binomial(2n, n) / (n + 1).
BigNat catalan(std::int64_t n);

// Bell numbers via b_{n+1} = 1 + sum_{k=0}^{n-1} binomial(n,k) b_{n-k},
// b_1 = 1. Requires n >= 1.
BigNat bell(std::int64_t n);

// Number of lattice paths starting at (x, y) that stay inside
// { (a, b) | a > b > 0 }, where each step decreases one coordinate by 1.
// Requires x > y > 0.
BigNat confined_path_count(std::int64_t x, std::int64_t y);

// Number of confined lattice paths from (a, b) to (a' + 1, 1):
// binomial(a - a' + b - 2, b - 1) - binomial(a + b - a' - 2, a - 1).
BigNat confined_paths_between(std::int64_t a, std::int64_t b, std::int64_t a_prime);

}  // namespace recurselab
