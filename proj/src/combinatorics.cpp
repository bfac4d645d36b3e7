#include "combinatorics.hpp"

#include <stdexcept>

namespace recurselab {

BigNat binomial(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigNat r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;  // exact: r is always a binomial coefficient
  }
  return r;
}

BigNat factorial(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument");
  BigNat r = 1;
  for (std::int64_t i = 2; i <= n; ++i) r *= i;
  return r;
}

BigNat catalan(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("catalan: negative index");
  return binomial(2 * n, n) / (n + 1);
}

BigNat bell(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("bell: index must be >= 1");
  std::vector<BigNat> b(static_cast<std::size_t>(n) + 1);
  b[1] = 1;
  for (std::int64_t m = 1; m < n; ++m) {
    // b_{m+1} = 1 + sum_{k=0}^{m-1} binomial(m, k) b_{m-k}
    BigNat s = 1;
    for (std::int64_t k = 0; k <= m - 1; ++k)
      s += binomial(m, k) * b[static_cast<std::size_t>(m - k)];
    b[static_cast<std::size_t>(m) + 1] = s;
  }
  return b[static_cast<std::size_t>(n)];
}

BigNat confined_path_count(std::int64_t x, std::int64_t y) {
  if (!(x > y && y > 0))
    throw std::invalid_argument("confined_path_count: requires x > y > 0");
  BigNat total = 0;
  for (std::int64_t k = 1; k <= y; ++k)
    total += binomial(x - y - 1 + 2 * k, k) - binomial(x - y - 1 + 2 * k, k - 1);
  return total;
}

BigNat confined_paths_between(std::int64_t a, std::int64_t b, std::int64_t a_prime) {
  return binomial(a - a_prime + b - 2, b - 1) - binomial(a + b - a_prime - 2, a - 1);
}

}  // namespace recurselab
