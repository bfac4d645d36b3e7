#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bignum.hpp"
#include "errors.hpp"
#include "hspec.hpp"
#include "mccarthy91.hpp"

namespace recurselab {

// Which recursive definition is being evaluated.
struct SchemaSpec {
  enum class Family {
    McCarthy91Original,  // f(x) = if x > 100 then x-10 else f(f(x+11))
    McCarthy91Modified,  // f(x) = if x > 100 then x-10 else f^91(x+901)
    Generalized91,       // f(x) = if x > a then x-b else f^c(x+d)
    Takeuchi3,
    Gabriel,
    BooleanB,
    KScheme,
    VH,
    TakeuchiM,
  };

  Family family = Family::Takeuchi3;
  Gen91Params gen91;  // Generalized91 only; must have integer parameters here
  HSpec hspec;        // VH only
  int m = 3;          // TakeuchiM only, m >= 3

  int arity() const;
  std::string name() const;

  static SchemaSpec mccarthy91_original();
  static SchemaSpec mccarthy91_modified();
  static SchemaSpec generalized91(Gen91Params p);
  static SchemaSpec takeuchi3();
  static SchemaSpec gabriel();
  static SchemaSpec boolean_b();
  static SchemaSpec k_scheme();
  static SchemaSpec vh(HSpec h);
  static SchemaSpec takeuchi_m(int m);

  // Textual schema names used by the CLI and C API: "m91", "m91mod", "tak3",
  // "gabriel", "boolb", "k", "gen91:a,b,c,d", "takm:m", "vh:<default-rule>",
  // "vh@<hspec-file>".
  static SchemaSpec parse(const std::string& text);
};

enum class Strategy { FullExpansion, Memoized, CallByNeed };

const char* strategy_name(Strategy s);
Strategy parse_strategy(const std::string& name);

struct CostReport {
  BigNat else_expansions;
  BigNat total_expansions;
  BigNat fuel_consumed;
};

struct EvalOutcome {
  enum class Kind { Value, FuelExhausted, CycleDetected };
  Kind kind = Kind::Value;
  std::int64_t value = 0;
  // For CycleDetected: a chain of argument tuples whose last element equals
  // the first, each arising from the previous by one outermost expansion.
  std::vector<std::vector<std::int64_t>> witness;
  CostReport cost;
};

struct EvalOptions {
  // Evaluation aborts with OverflowError if any intermediate argument leaves
  // [-guard, guard].
  std::int64_t guard = std::int64_t{1} << 40;
};

// Instrumented evaluation of `schema` at `args` under `strategy`.
// One fuel unit is consumed per body entry (the same event counted by
// total_expansions); under FullExpansion, else_expansions counts entries of
// the else branch.
EvalOutcome evaluate(const SchemaSpec& schema, std::span<const std::int64_t> args,
                     Strategy strategy, const BigNat& fuel,
                     const EvalOptions& options = {});

std::vector<Strategy> applicable_strategies(const SchemaSpec& schema);

// Runs every strategy applicable to the schema; Value results always agree.
std::vector<std::pair<Strategy, EvalOutcome>> compare_strategies(
    const SchemaSpec& schema, std::span<const std::int64_t> args,
    const BigNat& fuel, const EvalOptions& options = {});

}  // namespace recurselab
