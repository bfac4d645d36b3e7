#include "recurselab.h"

#include <cstring>
#include <exception>
#include <new>
#include <span>
#include <sstream>
#include <string>

#include <json.hpp>

#include "eval_core.hpp"
#include "errors.hpp"
#include "hspec.hpp"
#include "mccarthy91.hpp"
#include "power_series.hpp"
#include "takeuchi3.hpp"
#include "takeuchi_m.hpp"
#include "variants.hpp"
#include "verify.hpp"

using namespace recurselab;
using nlohmann::json;

extern "C" struct rl_outcome {
  EvalOutcome inner;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = new (std::nothrow) char[s.size() + 1];
  if (!out) return nullptr;
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

int fail(int code, const std::string& message) {
  g_last_error = message;
  return code;
}

BigNat parse_fuel(const char* text) {
  if (!text) throw std::invalid_argument("fuel string is null");
  BigNat fuel(text);
  return fuel;
}

// Maps C++ exceptions from the body onto error codes.
template <typename Body>
int guarded(Body&& body) {
  try {
    return body();
  } catch (const OverflowError& e) {
    return fail(RL_ERR_OVERFLOW, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(RL_ERR_USAGE, e.what());
  } catch (const EvalError& e) {
    return fail(RL_ERR_DOMAIN, e.what());
  } catch (const std::ios_base::failure& e) {
    return fail(RL_ERR_IO, e.what());
  } catch (const std::runtime_error& e) {
    return fail(RL_ERR_IO, e.what());
  } catch (const std::exception& e) {
    return fail(RL_ERR_INTERNAL, e.what());
  }
}

const char* kind_name(EvalOutcome::Kind k) {
  switch (k) {
    case EvalOutcome::Kind::Value:
      return "value";
    case EvalOutcome::Kind::FuelExhausted:
      return "fuel-exhausted";
    case EvalOutcome::Kind::CycleDetected:
      return "cycle-detected";
  }
  return "?";
}

json outcome_json(Strategy s, const EvalOutcome& o) {
  json j;
  j["strategy"] = strategy_name(s);
  j["kind"] = kind_name(o.kind);
  if (o.kind == EvalOutcome::Kind::Value) j["value"] = o.value;
  j["else"] = o.cost.else_expansions.str();
  j["total"] = o.cost.total_expansions.str();
  j["fuel"] = o.cost.fuel_consumed.str();
  return j;
}

int store(char** out, const std::string& s) {
  *out = dup_string(s);
  if (!*out) return fail(RL_ERR_INTERNAL, "out of memory");
  return RL_OK;
}

}  // namespace

extern "C" {

int rl_evaluate(const char* schema, const int64_t* args, size_t nargs,
                const char* strategy, const char* fuel_decimal,
                rl_outcome** out) {
  if (!schema || !strategy || !out || (!args && nargs > 0))
    return fail(RL_ERR_USAGE, "null argument");
  return guarded([&] {
    SchemaSpec spec = SchemaSpec::parse(schema);
    Strategy strat = parse_strategy(strategy);
    EvalOutcome o = evaluate(spec, std::span<const std::int64_t>(args, nargs),
                             strat, parse_fuel(fuel_decimal));
    *out = new rl_outcome{std::move(o)};
    return RL_OK;
  });
}

int rl_takm_cost(const int64_t* args, size_t nargs, const char* fuel_decimal,
                 int raw, rl_outcome** out) {
  if (!args || !out) return fail(RL_ERR_USAGE, "null argument");
  return guarded([&] {
    if (nargs < 3)
      return fail(RL_ERR_USAGE, "rl_takm_cost: needs at least 3 arguments");
    MTuple xs(args, args + nargs);
    EvalOutcome o = takm_full_cost(xs, parse_fuel(fuel_decimal), raw != 0);
    *out = new rl_outcome{std::move(o)};
    return RL_OK;
  });
}

int rl_outcome_kind(const rl_outcome* o) {
  if (!o) return -1;
  switch (o->inner.kind) {
    case EvalOutcome::Kind::Value:
      return RL_VALUE;
    case EvalOutcome::Kind::FuelExhausted:
      return RL_FUEL_EXHAUSTED;
    case EvalOutcome::Kind::CycleDetected:
      return RL_CYCLE_DETECTED;
  }
  return -1;
}

int rl_outcome_value(const rl_outcome* o, int64_t* value) {
  if (!o || !value) return fail(RL_ERR_USAGE, "null argument");
  if (o->inner.kind != EvalOutcome::Kind::Value)
    return fail(RL_ERR_DOMAIN, "outcome has no value");
  *value = o->inner.value;
  return RL_OK;
}

char* rl_outcome_counter(const rl_outcome* o, const char* counter) {
  if (!o || !counter) return nullptr;
  const CostReport& c = o->inner.cost;
  std::string name(counter);
  if (name == "else") return dup_string(c.else_expansions.str());
  if (name == "total") return dup_string(c.total_expansions.str());
  if (name == "fuel") return dup_string(c.fuel_consumed.str());
  return nullptr;
}

size_t rl_outcome_witness_size(const rl_outcome* o) {
  return o ? o->inner.witness.size() : 0;
}

char* rl_outcome_witness_tuple(const rl_outcome* o, size_t i) {
  if (!o || i >= o->inner.witness.size()) return nullptr;
  std::ostringstream s;
  const auto& tuple = o->inner.witness[i];
  for (size_t j = 0; j < tuple.size(); ++j) s << (j ? "," : "") << tuple[j];
  return dup_string(s.str());
}

void rl_outcome_free(rl_outcome* o) { delete o; }

int rl_compare_strategies(const char* schema, const int64_t* args, size_t nargs,
                          const char* fuel_decimal, char** out_json) {
  if (!schema || !out_json || (!args && nargs > 0))
    return fail(RL_ERR_USAGE, "null argument");
  return guarded([&] {
    SchemaSpec spec = SchemaSpec::parse(schema);
    auto rows = compare_strategies(spec, std::span<const std::int64_t>(args, nargs),
                                   parse_fuel(fuel_decimal));
    json arr = json::array();
    for (auto& [strategy, outcome] : rows)
      arr.push_back(outcome_json(strategy, outcome));
    return store(out_json, arr.dump());
  });
}

int rl_cost(const int64_t* args, size_t nargs, char** out_json) {
  if (!args || !out_json) return fail(RL_ERR_USAGE, "null argument");
  return guarded([&] {
    json j;
    if (nargs == 1) {
      j["F"] = f91_cost_closed(args[0]).str();
    } else if (nargs == 3) {
      Triple t{args[0], args[1], args[2]};
      j["T"] = T_count(t).str();
      j["V"] = V_count(t).str();
      j["K"] = K_closed(t).str();
    } else {
      return fail(RL_ERR_USAGE, "rl_cost: expected 1 or 3 arguments");
    }
    return store(out_json, j.dump());
  });
}

int rl_sequence(const char* name, int64_t max, char** csv) {
  if (!name || !csv) return fail(RL_ERR_USAGE, "null argument");
  return guarded([&] {
    std::string which(name);
    if (which != "Vn" && which != "Tn")
      return fail(RL_ERR_USAGE, "rl_sequence: name must be Vn or Tn");
    Sequences s = sequences(max);
    const auto& v = which == "Vn" ? s.vn : s.tn;
    std::ostringstream line;
    for (int64_t n = 1; n <= max; ++n)
      line << (n > 1 ? "," : "") << v[static_cast<size_t>(n)].str();
    return store(csv, line.str());
  });
}

int rl_series(const char* name, int64_t order, char** csv) {
  if (!name || !csv) return fail(RL_ERR_USAGE, "null argument");
  return guarded([&] {
    std::string which(name);
    PowerSeries s(order);
    if (which == "catalan")
      s = catalan_series(order);
    else if (which == "central")
      s = central_binomial_series(order);
    else if (which == "gf-residual")
      s = gf_functional_equation_residual(order);
    else if (which == "v-residual")
      s = v_series_identity_residual(order);
    else
      return fail(RL_ERR_USAGE, "rl_series: unknown series " + which);
    std::ostringstream line;
    for (int64_t n = 0; n < order; ++n)
      line << (n ? "," : "") << s.coeff(n).str();
    return store(csv, line.str());
  });
}

int rl_verify(const char* suite, int has_range, int64_t range_lo,
              int64_t range_hi, const char* fuel_decimal, int64_t order,
              char** out_json) {
  if (!suite || !out_json) return fail(RL_ERR_USAGE, "null argument");
  return guarded([&] {
    VerifyOptions opt;
    if (has_range) opt.range = std::make_pair(range_lo, range_hi);
    if (fuel_decimal) opt.fuel = parse_fuel(fuel_decimal);
    if (order > 0) opt.order = order;
    SuiteResult r = run_verify_suite(suite, opt);
    json j;
    j["suite"] = r.suite;
    j["ok"] = r.ok;
    j["checked"] = r.checked;
    j["witness"] = r.witness;
    return store(out_json, j.dump());
  });
}

int rl_classify_hspec(const char* path, char** verdict) {
  if (!path || !verdict) return fail(RL_ERR_USAGE, "null argument");
  return guarded([&] {
    HSpec h = HSpec::load(path);
    return store(verdict, verdict_name(vh_classify_boolean(h)));
  });
}

int rl_explore_op3(int64_t max_val, int64_t box_size, char** out_json) {
  if (!out_json) return fail(RL_ERR_USAGE, "null argument");
  return guarded([&] {
    ExploreReport report = open_problem3_explore(max_val, box_size);
    json entries = json::array();
    for (const auto& e : report.entries) {
      const char* kind = e.kind == FixedpointResult::Kind::Consistent
                             ? "consistent"
                             : e.kind == FixedpointResult::Kind::Inconsistent
                                   ? "inconsistent"
                                   : "inconclusive";
      entries.push_back({{"h", e.h_name}, {"kind", kind}, {"detail", e.detail}});
    }
    json j;
    j["consistent"] = report.consistent;
    j["inconsistent"] = report.inconsistent;
    j["inconclusive"] = report.inconclusive;
    j["entries"] = std::move(entries);
    return store(out_json, j.dump());
  });
}

int rl_darboux_error(int64_t n, double* error) {
  if (!error) return fail(RL_ERR_USAGE, "null argument");
  return guarded([&] {
    *error = darboux_relative_error(n);
    return RL_OK;
  });
}

void rl_string_free(char* s) { delete[] s; }

const char* rl_last_error(void) { return g_last_error.c_str(); }

}  // extern "C"
