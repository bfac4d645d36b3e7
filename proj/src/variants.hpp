#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bignum.hpp"
#include "eval_core.hpp"
#include "hspec.hpp"

namespace recurselab {

// An inclusive box of triples.
struct TripleBox {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
};

// Fixed point of Gabriel's recursion (base value z), as the displayed
// piecewise pattern, conditions evaluated in order.
std::int64_t gabriel_simple(const Triple& t);

// Fixed point of the boolean scheme (base: 0 if x = y = z else 1).
std::int64_t boolean_b_simple(const Triple& t);

enum class TotalityVerdict { Total, DivergesCaseI, DivergesCaseII, DivergesCaseIII };
const char* verdict_name(TotalityVerdict v);

// Classification of boolean auxiliary functions h: the v_h recursion defines
// a total function except in three cases determined by the six probe points
// (0,0,0), (-1,0,1), (-1,1,0), (0,0,1), (0,1,0), (-1,1,1).
TotalityVerdict vh_classify_boolean(const HSpec& h);

// The four total completions of the v_e recurrence (e = parity of x),
// tag in {0b00, 0b01, 0b10, 0b11}.
std::int64_t ve_completion(int tag, const Triple& t);

// Checks fn(t) = fn(fn(x-1,y,z), fn(y-1,z,x), fn(z-1,x,y)) (or the base
// branch base(t) when x <= y) for every t in the box.
struct SubstitutionCheck {
  bool ok = true;
  Triple witness{};
};
SubstitutionCheck recurrence_substitution_check(
    const std::function<std::int64_t(const Triple&)>& fn,
    const std::function<std::int64_t(const Triple&)>& base, const TripleBox& box);

// if x <= y then x else if y <= z+1 then c else min(y, c).
std::int64_t kc_function(std::int64_t c, const Triple& t);

// Evaluates the k scheme at (x+1, x, x) under full expansion; diverges.
EvalOutcome k_partial_demo(std::int64_t x, const BigNat& fuel);

// Bounded consistency search for the v_h recurrence over a box of triples
// and a finite candidate value range.
struct FixedpointResult {
  enum class Kind { Consistent, Inconsistent, Inconclusive };
  Kind kind = Kind::Inconclusive;
  std::map<Triple, std::int64_t> table;   // values determined (Consistent)
  Triple root{};                          // Inconsistent: offending tuple
  std::vector<std::string> chain;         // derivation steps
  std::optional<std::int64_t> self_offset;  // v = v + delta with delta != 0
  std::vector<std::pair<std::int64_t, std::int64_t>> candidate_sweep;  // (c, r(c))
  std::string note;                       // Inconclusive diagnostics
};
FixedpointResult fixedpoint_search(const HSpec& h, const TripleBox& box,
                                   std::int64_t value_lo, std::int64_t value_hi,
                                   const BigNat& fuel);
// Same search for an arbitrary auxiliary function.
FixedpointResult fixedpoint_search(
    const std::function<std::int64_t(const Triple&)>& h, const TripleBox& box,
    std::int64_t value_lo, std::int64_t value_hi, const BigNat& fuel);

// Bounded exploration of auxiliary functions restricted (by clamping) to
// h(x, y, z) < max(x, y, z): runs fixedpoint_search for each family member
// and tallies the verdicts. An Inconsistent finding would settle the
// question negatively at this scale.
struct ExploreReport {
  struct Entry {
    std::string h_name;
    FixedpointResult::Kind kind;
    std::string detail;
  };
  std::vector<Entry> entries;
  int consistent = 0;
  int inconsistent = 0;
  int inconclusive = 0;
};
ExploreReport open_problem3_explore(std::int64_t max_val, std::int64_t box_size);

}  // namespace recurselab
