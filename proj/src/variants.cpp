#include "variants.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace recurselab {

namespace {
bool odd(std::int64_t v) { return (v & 1) != 0; }
}  // namespace

std::int64_t gabriel_simple(const Triple& t) {
  auto [x, y, z] = t;
  if (x <= y) return z;
  if (y >= z) {
    if (y == z || odd(x - y)) return y;
    return z + 1;
  }
  if (z <= x + 1 && (z <= x || x > y + 1)) return y;
  if (!odd(z - x)) return x;
  return y + 1;
}

std::int64_t boolean_b_simple(const Triple& t) {
  auto [x, y, z] = t;
  if (x <= y) return (x == y && y == z) ? 0 : 1;
  if (z > y + 1) return odd(x - z) ? 0 : 1;
  if (y == z) return odd(x - y) ? 1 : 0;
  return odd(x - y) ? 0 : 1;
}

const char* verdict_name(TotalityVerdict v) {
  switch (v) {
    case TotalityVerdict::Total:
      return "total";
    case TotalityVerdict::DivergesCaseI:
      return "diverges-case-i";
    case TotalityVerdict::DivergesCaseII:
      return "diverges-case-ii";
    case TotalityVerdict::DivergesCaseIII:
      return "diverges-case-iii";
  }
  return "?";
}

TotalityVerdict vh_classify_boolean(const HSpec& h) {
  auto probe = [&](std::int64_t x, std::int64_t y, std::int64_t z) {
    std::int64_t v = h.lookup(x, y, z);
    if (v != 0 && v != 1)
      throw std::invalid_argument(
          "vh_classify_boolean: h is not boolean on the probe points");
    return v;
  };
  std::int64_t h000 = probe(0, 0, 0), hm101 = probe(-1, 0, 1),
               hm110 = probe(-1, 1, 0), h001 = probe(0, 0, 1),
               h010 = probe(0, 1, 0), hm111 = probe(-1, 1, 1);
  if (h000 == 1 && hm101 == 0 && hm110 == 0) return TotalityVerdict::DivergesCaseI;
  if (h001 == 1 && h010 == 1 && hm111 == 0) return TotalityVerdict::DivergesCaseII;
  if (h000 == 1 && h001 == 1 && hm110 == 1 && hm101 == 0 && hm111 == 0)
    return TotalityVerdict::DivergesCaseIII;
  return TotalityVerdict::Total;
}

std::int64_t ve_completion(int tag, const Triple& t) {
  auto [x, y, z] = t;
  std::int64_t base = odd(x) ? 0 : 1;
  switch (tag) {
    case 0b00:
      return base;
    case 0b01:
      if (x <= y) return base;
      if (!odd(x)) return 1;
      if (odd(y)) return 0;
      return odd(z) ? 1 : 0;
    case 0b10:
      if (x <= y) return base;
      if (odd(x)) return (odd(y) || odd(z)) ? 0 : 1;
      if (odd(y) || odd(z)) return 1;
      return (y <= z && z <= x) ? 1 : 0;
    case 0b11:
      if (x <= y) return base;
      if (!odd(x)) return 1;
      if (odd(y)) return 0;
      if (y <= z) return 1;
      return odd(z) ? 1 : 0;
    default:
      throw std::invalid_argument("ve_completion: tag must be in {0b00..0b11}");
  }
}

SubstitutionCheck recurrence_substitution_check(
    const std::function<std::int64_t(const Triple&)>& fn,
    const std::function<std::int64_t(const Triple&)>& base, const TripleBox& box) {
  for (std::int64_t x = box.lo; x <= box.hi; ++x)
    for (std::int64_t y = box.lo; y <= box.hi; ++y)
      for (std::int64_t z = box.lo; z <= box.hi; ++z) {
        Triple t{x, y, z};
        std::int64_t expect;
        if (x <= y) {
          expect = base(t);
        } else {
          Triple inner{fn(Triple{x - 1, y, z}), fn(Triple{y - 1, z, x}),
                       fn(Triple{z - 1, x, y})};
          expect = fn(inner);
        }
        if (fn(t) != expect) return {false, t};
      }
  return {true, {}};
}

std::int64_t kc_function(std::int64_t c, const Triple& t) {
  auto [x, y, z] = t;
  if (x <= y) return x;
  if (y <= z + 1) return c;
  return std::min(y, c);
}

EvalOutcome k_partial_demo(std::int64_t x, const BigNat& fuel) {
  std::array<std::int64_t, 3> args{x + 1, x, x};
  return evaluate(SchemaSpec::k_scheme(), args, Strategy::FullExpansion, fuel);
}

// ---------------------------------------------------------------------------
// fixedpoint_search

namespace {

using HFn = std::function<std::int64_t(const Triple&)>;

struct NestedCycle {};
struct OutOfFuel {};

// Evaluates the v_h recurrence at concrete triples, returning the assumed
// value whenever the designated root tuple is re-entered. Tracks which
// results depend on that assumption so a derivation chain can be reported.
class AssumeEval {
 public:
  AssumeEval(const HFn& h, const Triple& root, std::int64_t assumed,
             std::uint64_t budget, const TripleBox& box)
      : h_(h), root_(root), assumed_(assumed), budget_(budget), box_(box) {}

  struct R {
    std::int64_t v;
    bool dep;
  };

  R eval(const Triple& t, unsigned dep_mask) {
    if (budget_ == 0) throw OutOfFuel{};
    --budget_;
    if (dep_mask != 0) dep_calls_.push_back({t, dep_mask});
    if (in_progress_.count(t)) {
      if (t == root_) {
        used_assumption_ = true;
        return {assumed_, true};
      }
      throw NestedCycle{};
    }
    if (t[0] <= t[1]) return {h_(t), dep_mask != 0};
    if (t[0] < box_.lo || t[0] > box_.hi || t[1] < box_.lo || t[1] > box_.hi ||
        t[2] < box_.lo || t[2] > box_.hi)
      escaped_ = true;
    in_progress_.insert(t);
    auto bit = [&](int i) { return (dep_mask >> i) & 1u; };
    R r0 = eval(Triple{t[0] - 1, t[1], t[2]}, bit(0) | bit(1) << 1 | bit(2) << 2);
    R r1 = eval(Triple{t[1] - 1, t[2], t[0]}, bit(1) | bit(2) << 1 | bit(0) << 2);
    R r2 = eval(Triple{t[2] - 1, t[0], t[1]}, bit(2) | bit(0) << 1 | bit(1) << 2);
    unsigned outer_mask = (r0.dep ? 1u : 0) | (r1.dep ? 2u : 0) | (r2.dep ? 4u : 0);
    R r = eval(Triple{r0.v, r1.v, r2.v}, outer_mask);
    in_progress_.erase(t);
    return r;
  }

  bool used_assumption() const { return used_assumption_; }
  bool escaped() const { return escaped_; }
  const std::vector<std::pair<Triple, unsigned>>& dep_calls() const {
    return dep_calls_;
  }

 private:
  const HFn& h_;
  Triple root_;
  std::int64_t assumed_;
  std::uint64_t budget_;
  TripleBox box_;
  bool used_assumption_ = false;
  bool escaped_ = false;
  std::set<Triple> in_progress_;
  std::vector<std::pair<Triple, unsigned>> dep_calls_;
};

std::string render_triple(const Triple& t) {
  std::ostringstream s;
  s << "(" << t[0] << "," << t[1] << "," << t[2] << ")";
  return s.str();
}

std::string render_call(const Triple& root, const Triple& t, unsigned mask) {
  std::ostringstream s;
  s << "v_h(";
  for (int i = 0; i < 3; ++i) {
    if (i) s << ", ";
    if ((mask >> i) & 1u)
      s << "v_h" << render_triple(root);
    else
      s << t[static_cast<std::size_t>(i)];
  }
  s << ")";
  return s.str();
}

}  // namespace

FixedpointResult fixedpoint_search(const HFn& h, const TripleBox& box,
                                   std::int64_t value_lo, std::int64_t value_hi,
                                   const BigNat& fuel) {
  if (value_lo > value_hi)
    throw std::invalid_argument("fixedpoint_search: empty value range");
  std::uint64_t budget = fuel > std::numeric_limits<std::uint64_t>::max()
                             ? std::numeric_limits<std::uint64_t>::max()
                             : static_cast<std::uint64_t>(fuel);
  FixedpointResult result;
  result.kind = FixedpointResult::Kind::Consistent;
  for (std::int64_t x = box.lo; x <= box.hi; ++x)
    for (std::int64_t y = box.lo; y <= box.hi; ++y)
      for (std::int64_t z = box.lo; z <= box.hi; ++z) {
        Triple t{x, y, z};
        if (x <= y) {
          result.table[t] = h(t);
          continue;
        }
        bool inconclusive = false;
        std::vector<std::pair<std::int64_t, std::int64_t>> sweep;
        std::vector<std::pair<Triple, unsigned>> last_deps;
        bool assumption_needed = false;
        for (std::int64_t c = value_lo; c <= value_hi; ++c) {
          AssumeEval ev(h, t, c, budget, box);
          try {
            auto r = ev.eval(t, 0);
            if (!ev.used_assumption()) {
              // Value independent of any assumption: record and move on.
              if (ev.escaped() && result.kind == FixedpointResult::Kind::Consistent)
                result.kind = FixedpointResult::Kind::Inconclusive;
              result.table[t] = r.v;
              assumption_needed = false;
              break;
            }
            assumption_needed = true;
            sweep.emplace_back(c, r.v);
            last_deps = ev.dep_calls();
          } catch (const NestedCycle&) {
            inconclusive = true;
            break;
          } catch (const OutOfFuel&) {
            inconclusive = true;
            break;
          }
        }
        if (inconclusive) {
          result.kind = FixedpointResult::Kind::Inconclusive;
          result.note += "unresolved at " + render_triple(t) + "; ";
          continue;
        }
        if (!assumption_needed) continue;
        // Self-referential tuple: look for a candidate fixed point.
        auto hit = std::find_if(sweep.begin(), sweep.end(),
                                [](auto& p) { return p.first == p.second; });
        if (hit != sweep.end()) {
          result.table[t] = hit->first;
          continue;
        }
        // No value in range satisfies the derived self-equation.
        FixedpointResult bad;
        bad.kind = FixedpointResult::Kind::Inconsistent;
        bad.root = t;
        bad.candidate_sweep = sweep;
        bool affine = true;
        for (auto& [c, r] : sweep)
          if (r - c != sweep.front().second - sweep.front().first) affine = false;
        std::string self = "v_h" + render_triple(t);
        bad.chain.push_back(self + " expands through:");
        for (auto& [args, mask] : last_deps)
          bad.chain.push_back("  " + render_call(t, args, mask));
        if (affine) {
          bad.self_offset = sweep.front().second - sweep.front().first;
          bad.chain.push_back(self + " = " + std::to_string(*bad.self_offset) +
                              " + " + self);
        } else {
          std::ostringstream line;
          line << "no v in [" << value_lo << ".." << value_hi << "] satisfies v = "
               << (last_deps.empty() ? self : render_call(t, last_deps.back().first,
                                                          last_deps.back().second));
          bad.chain.push_back(line.str());
          for (auto& [c, r] : sweep)
            bad.chain.push_back("  candidate " + std::to_string(c) + " -> " +
                                std::to_string(r));
        }
        return bad;
      }
  return result;
}

FixedpointResult fixedpoint_search(const HSpec& h, const TripleBox& box,
                                   std::int64_t value_lo, std::int64_t value_hi,
                                   const BigNat& fuel) {
  HFn fn = [&h](const Triple& t) { return h.lookup(t[0], t[1], t[2]); };
  return fixedpoint_search(fn, box, value_lo, value_hi, fuel);
}

ExploreReport open_problem3_explore(std::int64_t max_val, std::int64_t box_size) {
  if (max_val < 0 || box_size < 1)
    throw std::invalid_argument("open_problem3_explore: bad bounds");
  TripleBox box{0, box_size};
  std::int64_t vlo = -2, vhi = box_size + max_val + 2;
  BigNat fuel = 200000;

  std::vector<std::pair<std::string, HFn>> family;
  auto maxt = [](const Triple& t) { return std::max({t[0], t[1], t[2]}); };
  auto clamped = [maxt](std::string name, HFn raw) {
    return std::pair<std::string, HFn>(
        std::move(name),
        [maxt, raw = std::move(raw)](const Triple& t) {
          return std::min(raw(t), maxt(t) - 1);
        });
  };
  for (std::int64_t c = 0; c <= max_val; ++c)
    family.push_back(clamped("const-" + std::to_string(c),
                             [c](const Triple&) { return c; }));
  family.push_back(clamped("min", [](const Triple& t) {
    return std::min({t[0], t[1], t[2]});
  }));
  family.push_back(clamped("x", [](const Triple& t) { return t[0]; }));
  family.push_back(clamped("y", [](const Triple& t) { return t[1]; }));
  family.push_back(clamped("z", [](const Triple& t) { return t[2]; }));
  family.push_back(clamped("max-1", [maxt](const Triple& t) { return maxt(t); }));
  family.push_back(clamped("parity-x", [](const Triple& t) {
    return (t[0] & 1) == 0 ? 1 : 0;
  }));
  // Reference entries outside the strict h < max family.
  family.emplace_back("tak-y", [](const Triple& t) { return t[1]; });
  family.emplace_back("zero", [](const Triple&) { return std::int64_t{0}; });

  ExploreReport report;
  for (auto& [name, fn] : family) {
    FixedpointResult r = fixedpoint_search(fn, box, vlo, vhi, fuel);
    ExploreReport::Entry e;
    e.h_name = name;
    e.kind = r.kind;
    switch (r.kind) {
      case FixedpointResult::Kind::Consistent:
        ++report.consistent;
        e.detail = "consistent on box";
        break;
      case FixedpointResult::Kind::Inconsistent:
        ++report.inconsistent;
        e.detail = "inconsistent at " + render_triple(r.root);
        break;
      case FixedpointResult::Kind::Inconclusive:
        ++report.inconclusive;
        e.detail = r.note.empty() ? "inconclusive" : r.note;
        break;
    }
    report.entries.push_back(std::move(e));
  }
  return report;
}

}  // namespace recurselab
