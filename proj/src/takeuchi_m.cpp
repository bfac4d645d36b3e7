#include "takeuchi_m.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>
#include <stdexcept>

namespace recurselab {

std::optional<std::size_t> first_rise(std::span<const std::int64_t> xs) {
  for (std::size_t k = 1; k < xs.size(); ++k)
    if (xs[k - 1] <= xs[k]) return k;  // prefix is strictly decreasing
  return std::nullopt;
}

std::int64_t u_function(std::span<const std::int64_t> xs) {
  auto k = first_rise(xs);
  return k ? xs[*k] : xs[0];
}

std::int64_t g_aux(std::span<const std::int64_t> xs) {
  std::size_t j = xs.size();
  if (j < 2) throw std::invalid_argument("g_aux: needs at least two arguments");
  if (j == 2) return xs[1];
  if (xs[0] == xs[1] + 1) return g_aux(xs.subspan(1));
  if (xs[1] == xs[2] + 1) return std::max(xs[2], xs[j - 1]);
  return xs[j - 1];
}

std::int64_t f_m(std::span<const std::int64_t> xs) {
  if (xs.size() < 3) throw std::invalid_argument("f_m: needs m >= 3");
  auto k = first_rise(xs);
  if (!k) return xs[0];
  return g_aux(xs.first(*k + 1));
}

namespace {

// (x_i - 1, x_{i+1}, ..., x_m, x_1, ..., x_{i-1}), i zero-based here.
MTuple rotation(const MTuple& xs, std::size_t i) {
  MTuple r;
  r.reserve(xs.size());
  r.push_back(xs[i] - 1);
  for (std::size_t j = 1; j < xs.size(); ++j) r.push_back(xs[(i + j) % xs.size()]);
  return r;
}

}  // namespace

std::optional<MTuple> theorem4_verify(int m, std::int64_t lo, std::int64_t hi) {
  if (m < 3) throw std::invalid_argument("theorem4_verify: needs m >= 3");
  if (lo > hi) throw std::invalid_argument("theorem4_verify: empty box");
  MTuple xs(static_cast<std::size_t>(m), lo);
  for (;;) {
    if (xs[0] > xs[1]) {
      MTuple ys(xs.size());
      for (std::size_t i = 0; i < xs.size(); ++i) ys[i] = f_m(rotation(xs, i));
      if (f_m(ys) != f_m(xs)) return xs;
    }
    // odometer step
    std::size_t i = xs.size();
    while (i > 0 && xs[i - 1] == hi) xs[--i] = lo;
    if (i == 0) return std::nullopt;
    ++xs[i - 1];
  }
}

EvalOutcome takm_lazy(const MTuple& xs, const BigNat& fuel) {
  if (xs.size() < 3) throw std::invalid_argument("takm_lazy: needs m >= 3");
  return evaluate(SchemaSpec::takeuchi_m(static_cast<int>(xs.size())), xs,
                  Strategy::CallByNeed, fuel);
}

namespace {

struct TFuelOut {};
struct TCycle {};

struct TCounter {
  std::map<MTuple, BigNat> memo;
  std::set<MTuple> in_progress;
  std::uint64_t budget;
  std::uint64_t used = 0;

  BigNat run(const MTuple& xs) {
    if (budget == 0) throw TFuelOut{};
    --budget;
    ++used;
    if (xs[0] <= xs[1]) return 0;
    auto it = memo.find(xs);
    if (it != memo.end()) return it->second;
    if (in_progress.count(xs)) throw TCycle{};
    in_progress.insert(xs);
    BigNat s = 1;
    MTuple inner(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
      MTuple child = rotation(xs, i);
      inner[i] = f_m(child);
      s += run(child);
    }
    s += run(inner);
    in_progress.erase(xs);
    BigNat& slot = memo[xs];
    slot = std::move(s);
    return slot;
  }
};

}  // namespace

EvalOutcome takm_full_cost(const MTuple& xs, const BigNat& fuel, bool raw) {
  if (xs.size() < 3) throw std::invalid_argument("takm_full_cost: needs m >= 3");
  if (raw)
    return evaluate(SchemaSpec::takeuchi_m(static_cast<int>(xs.size())), xs,
                    Strategy::FullExpansion, fuel);
  TCounter c;
  c.budget = fuel > std::numeric_limits<std::uint64_t>::max()
                 ? std::numeric_limits<std::uint64_t>::max()
                 : static_cast<std::uint64_t>(fuel);
  EvalOutcome out;
  try {
    BigNat t = c.run(xs);
    out.kind = EvalOutcome::Kind::Value;
    out.value = f_m(xs);
    out.cost.else_expansions = t;
    out.cost.total_expansions = 1 + BigNat(xs.size() + 1) * t;
    out.cost.fuel_consumed = c.used;
  } catch (const TFuelOut&) {
    out.kind = EvalOutcome::Kind::FuelExhausted;
    out.cost.fuel_consumed = fuel;
  } catch (const TCycle&) {
    // A self-dependent tuple: the recurrence has no finite value there.
    out.kind = EvalOutcome::Kind::FuelExhausted;
    out.cost.fuel_consumed = fuel;
  }
  return out;
}

}  // namespace recurselab
