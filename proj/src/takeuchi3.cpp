#include "takeuchi3.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>
#include <map>
#include <stdexcept>

#include "combinatorics.hpp"
#include "eval_core.hpp"

namespace recurselab {

std::int64_t tak_simple(const Triple& t) {
  auto [x, y, z] = t;
  if (x <= y) return y;
  if (y <= z) return z;
  return x;
}

namespace {

Triple child(const Triple& t, int i) {
  auto [x, y, z] = t;
  switch (i) {
    case 0:
      return {x - 1, y, z};
    case 1:
      return {y - 1, z, x};
    default:
      return {z - 1, x, y};
  }
}

template <bool WithOuter>
BigNat count_rec(const Triple& t, std::map<Triple, BigNat>& memo) {
  if (t[0] <= t[1]) return 0;
  auto it = memo.find(t);
  if (it != memo.end()) return it->second;
  BigNat s = 1;
  for (int i = 0; i < 3; ++i) s += count_rec<WithOuter>(child(t, i), memo);
  if constexpr (WithOuter) {
    Triple outer{tak_simple(child(t, 0)), tak_simple(child(t, 1)),
                 tak_simple(child(t, 2))};
    s += count_rec<WithOuter>(outer, memo);
  }
  BigNat& slot = memo[t];
  slot = std::move(s);
  return slot;
}

}  // namespace

BigNat T_count(const Triple& t) {
  std::map<Triple, BigNat> memo;
  return count_rec<true>(t, memo);
}

BigNat V_count(const Triple& t) {
  std::map<Triple, BigNat> memo;
  return count_rec<false>(t, memo);
}

BigNat V_closed(std::int64_t x, std::int64_t y) {
  if (!(x > y && y > 0))
    throw std::invalid_argument("V_closed: requires x > y > 0");
  return confined_path_count(x, y);
}

BigNat V_wedge(const Triple& t) {
  auto [x, y, z] = t;
  if (!(x > y && x >= z && z >= y))
    throw std::invalid_argument("V_wedge: requires x > y and x >= z >= y");
  // The descent V(x,y,z) = 1 + V(x-1,y,z) bottoms out at V(z,y,z); when
  // z = y that is already a base case, so the "+1" term disappears.
  if (z == y) return BigNat(x - y);
  return BigNat(1) + (x - z) + V_count(Triple{z - 1, y, z});
}

Sequences sequences(std::int64_t n_max) {
  if (n_max < 1) throw std::invalid_argument("sequences: n_max must be >= 1");
  Sequences s;
  s.vn.resize(static_cast<std::size_t>(n_max) + 1);
  s.tn.resize(static_cast<std::size_t>(n_max) + 1);
  BigNat partial = 0;
  for (std::int64_t n = 1; n <= n_max; ++n) {
    partial += catalan(n);
    s.vn[static_cast<std::size_t>(n)] = partial;  // V_n = C_1 + ... + C_n
  }
  s.tn[1] = 1;
  for (std::int64_t n = 1; n < n_max; ++n) {
    // T_{n+1} = V(n+2, n+1, 0) + sum_{k=0}^{n-1} (binom(n+k, n) -
    //           binom(n+k, n+1)) T_{n-k}; V(n+2, n+1, 0) = V_{n+1}.
    BigNat t = s.vn[static_cast<std::size_t>(n + 1)];
    for (std::int64_t k = 0; k <= n - 1; ++k)
      t += (binomial(n + k, n) - binomial(n + k, n + 1)) *
           s.tn[static_cast<std::size_t>(n - k)];
    s.tn[static_cast<std::size_t>(n + 1)] = std::move(t);
  }
  return s;
}

BigNat K_count_lazy(const Triple& t) {
  auto out = evaluate(SchemaSpec::takeuchi3(), std::span<const std::int64_t>(t),
                      Strategy::CallByNeed, BigNat(1) << 40);
  if (out.kind != EvalOutcome::Kind::Value)
    throw EvalError("K_count_lazy: lazy evaluation did not terminate");
  return out.cost.else_expansions;
}

BigNat K_closed(const Triple& t) {
  auto [x, y, z] = t;
  if (x <= y) return 0;
  if (y <= z) return BigNat(x) - y;
  if (y > z + 1) return BigNat(x - y) * (y - z);
  return BigNat(x - y) * (x - y + 3) / 2;  // y = z + 1
}

std::vector<BoundsRow> bounds_check(std::int64_t n_max) {
  if (n_max < 1) throw std::invalid_argument("bounds_check: n_max must be >= 1");
  Sequences s = sequences(n_max + 1);
  std::vector<BoundsRow> rows;
  BigNat fact = 1;  // n!
  BigNat pow4 = 1;  // 4^n
  for (std::int64_t n = 1; n <= n_max; ++n) {
    fact *= n;
    pow4 *= 4;
    const BigNat& tn = s.tn[static_cast<std::size_t>(n)];
    rows.push_back({n, bell(n) <= tn, tn < 3 * fact,
                    s.vn[static_cast<std::size_t>(n + 1)] <= pow4});
  }
  return rows;
}

namespace {

PowerSeries t_series(std::int64_t order) {
  PowerSeries t(order);
  if (order > 1) {
    Sequences s = sequences(order - 1);
    for (std::int64_t n = 1; n < order; ++n)
      t.set_coeff(n, s.tn[static_cast<std::size_t>(n)]);
  }
  return t;
}

}  // namespace

PowerSeries gf_functional_equation_residual(std::int64_t order) {
  if (order < 2)
    throw std::invalid_argument("gf residual: order must be >= 2");
  PowerSeries c = catalan_series(order);
  PowerSeries one = PowerSeries::constant(1, order);
  PowerSeries t = t_series(order);
  PowerSeries geom = PowerSeries::geometric(order);
  PowerSeries inv_sqrt = central_binomial_series(order);
  PowerSeries zc = c.shift(1);  // z C(z), composable
  PowerSeries rhs = (c - one) * geom +
                    (PowerSeries::constant(2, order) - c).shift(1) * inv_sqrt *
                        t.compose(zc);
  return t - rhs;
}

PowerSeries v_series_identity_residual(std::int64_t order) {
  PowerSeries c = catalan_series(order);
  PowerSeries one = PowerSeries::constant(1, order);
  PowerSeries v(order);
  if (order > 1) {
    Sequences s = sequences(order - 1);
    for (std::int64_t n = 1; n < order; ++n)
      v.set_coeff(n, s.vn[static_cast<std::size_t>(n)]);
  }
  return (c - one) * PowerSeries::geometric(order) - v;
}

double darboux_relative_error(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("darboux: n must be >= 1");
  using Float = boost::multiprecision::cpp_bin_float_50;
  Sequences s = sequences(n);
  Float vn(s.vn[static_cast<std::size_t>(n)]);
  Float pow4 = pow(Float(4), static_cast<int>(n));
  Float ratio = vn / pow4;
  Float approx = 4 / (pow(Float(n), Float(1.5)) * 3 *
                      sqrt(boost::math::constants::pi<Float>()));
  Float err = abs(ratio / approx - 1);
  return err.convert_to<double>();
}

}  // namespace recurselab
