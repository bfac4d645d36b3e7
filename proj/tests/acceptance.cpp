// Acceptance gate: one self-contained check per criterion, one line of
// output each, nonzero exit if anything fails.
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "combinatorics.hpp"
#include "eval_core.hpp"
#include "mccarthy91.hpp"
#include "takeuchi3.hpp"
#include "takeuchi_m.hpp"
#include "variants.hpp"
#include "verify.hpp"

using namespace recurselab;

namespace {

std::string run_cli(const std::string& args, int& status) {
  std::string cmd = std::string(RECURSELAB_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    status = -1;
    return "";
  }
  std::string out;
  std::array<char, 4096> buf;
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    out.append(buf.data(), n);
  int raw = pclose(pipe);
  status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return out;
}

bool suite_ok(const char* name, std::string& detail) {
  SuiteResult r = run_verify_suite(name, VerifyOptions{});
  if (!r.ok) detail = r.witness;
  return r.ok;
}

// 1. Frozen sequence tables through the command-line interface.
bool c01(std::string& detail) {
  int status = 0;
  std::string vn = run_cli("sequence --name Vn --max 9 --deterministic", status);
  if (status != 0 ||
      vn != "name=Vn max=9 values=1,3,8,22,64,196,625,2055,6917\n") {
    detail = "Vn output: " + vn;
    return false;
  }
  std::string tn = run_cli("sequence --name Tn --max 9 --deterministic", status);
  if (status != 0 ||
      tn != "name=Tn max=9 values=1,4,14,53,223,1034,5221,28437,165859\n") {
    detail = "Tn output: " + tn;
    return false;
  }
  return true;
}

// 2. The 91 property on [-1000, 200] via four routes.
bool c02(std::string& detail) {
  Gen91Params classic{Rational(100), Rational(10), 2, Rational(11)};
  BigNat fuel(10000000);
  auto orig = SchemaSpec::mccarthy91_original();
  auto modif = SchemaSpec::mccarthy91_modified();
  for (std::int64_t x = -1000; x <= 200; ++x) {
    std::int64_t want = x <= 101 ? 91 : x - 10;
    if (gen91_closed(classic, Rational(x)) != Rational(want)) {
      detail = "closed form at x=" + std::to_string(x);
      return false;
    }
    if (gen91_simplified(classic, Rational(x), fuel) != Rational(want)) {
      detail = "simplified recurrence at x=" + std::to_string(x);
      return false;
    }
    std::int64_t args[1] = {x};
    auto a = evaluate(orig, args, Strategy::Memoized, fuel);
    auto b = evaluate(modif, args, Strategy::Memoized, fuel);
    if (a.kind != EvalOutcome::Kind::Value || a.value != want ||
        b.kind != EvalOutcome::Kind::Value || b.value != want) {
      detail = "memoized evaluation at x=" + std::to_string(x);
      return false;
    }
  }
  return true;
}

// 3. The expansion-count closed form.
bool c03(std::string& detail) {
  for (std::int64_t x = -500; x <= 150; ++x) {
    BigNat want = x > 100 ? BigNat(1) : BigNat(9192 - 91 * x);
    if (f91_cost_recurrence(x) != want) {
      detail = "F(" + std::to_string(x) + ")";
      return false;
    }
  }
  return true;
}

// 4. Termination classification and route agreement on the parameter grid.
bool c04(std::string& detail) { return suite_ok("theorem1", detail); }

// 5. totalExpansions = 1 + 4 T on a box under full expansion.
bool c05(std::string& detail) {
  auto schema = SchemaSpec::takeuchi3();
  BigNat fuel("10000000000");
  for (std::int64_t x = -3; x <= 8; ++x)
    for (std::int64_t y = -3; y <= 8; ++y)
      for (std::int64_t z = -3; z <= 8; ++z) {
        std::int64_t args[3] = {x, y, z};
        auto out = evaluate(schema, args, Strategy::FullExpansion, fuel);
        if (out.kind != EvalOutcome::Kind::Value ||
            out.cost.total_expansions != 1 + 4 * T_count({x, y, z})) {
          detail = "(" + std::to_string(x) + "," + std::to_string(y) + "," +
                   std::to_string(z) + ")";
          return false;
        }
      }
  return true;
}

// 6. Lattice-path closed form and the Catalan partial sums.
bool c06(std::string& detail) {
  for (std::int64_t x = 2; x <= 8; ++x)
    for (std::int64_t y = 1; y < x; ++y)
      if (V_closed(x, y) != V_count({x, y, 0})) {
        detail = "V(" + std::to_string(x) + "," + std::to_string(y) + ",0)";
        return false;
      }
  BigNat partial(0);
  for (std::int64_t n = 1; n <= 30; ++n) {
    partial += catalan(n);
    if (V_count({n + 1, n, 0}) != partial) {
      detail = "V_" + std::to_string(n);
      return false;
    }
  }
  return true;
}

// 7. Sequence rows against the direct count.
bool c07(std::string& detail) {
  Sequences s = sequences(7);
  for (std::int64_t n = 1; n <= 7; ++n)
    if (s.tn[static_cast<std::size_t>(n)] != T_count({n, 0, n + 1})) {
      detail = "T_" + std::to_string(n);
      return false;
    }
  return true;
}

// 8. Call-by-need counts against the closed forms.
bool c08(std::string& detail) {
  for (std::int64_t x = -2; x <= 9; ++x)
    for (std::int64_t y = -2; y <= 9; ++y)
      for (std::int64_t z = -2; z <= 9; ++z)
        if (K_count_lazy({x, y, z}) != K_closed({x, y, z})) {
          detail = "K(" + std::to_string(x) + "," + std::to_string(y) + "," +
                   std::to_string(z) + ")";
          return false;
        }
  return true;
}

// 9. bell(n) <= T_n < 3 n!.
bool c09(std::string& detail) {
  for (const auto& row : bounds_check(40))
    if (!row.bell_le_tn || !row.tn_lt_3fact) {
      detail = "n=" + std::to_string(row.n);
      return false;
    }
  return true;
}

// 10. Generating-function identities to order 16.
bool c10(std::string& detail) { return suite_ok("gf", detail); }

// 11. Asymptotic error shrinks.
bool c11(std::string& detail) {
  double e100 = darboux_relative_error(100);
  double e400 = darboux_relative_error(400);
  if (e100 < 0.1 && e400 < e100) return true;
  detail = "error(100)=" + std::to_string(e100) +
           " error(400)=" + std::to_string(e400);
  return false;
}

// 12. Gabriel's scheme: spot value and box agreement.
bool c12(std::string& detail) {
  auto schema = SchemaSpec::gabriel();
  BigNat fuel(10000000);
  if (gabriel_simple({18, 12, 6}) != 7) {
    detail = "closed form at (18,12,6)";
    return false;
  }
  std::int64_t probe[3] = {18, 12, 6};
  auto out = evaluate(schema, probe, Strategy::FullExpansion, fuel);
  if (out.kind != EvalOutcome::Kind::Value || out.value != 7) {
    detail = "full expansion at (18,12,6)";
    return false;
  }
  for (std::int64_t x = -2; x <= 8; ++x)
    for (std::int64_t y = -2; y <= 8; ++y)
      for (std::int64_t z = -2; z <= 8; ++z) {
        std::int64_t args[3] = {x, y, z};
        auto o = evaluate(schema, args, Strategy::FullExpansion, fuel);
        if (o.kind != EvalOutcome::Kind::Value ||
            o.value != gabriel_simple({x, y, z})) {
          detail = "(" + std::to_string(x) + "," + std::to_string(y) + "," +
                   std::to_string(z) + ")";
          return false;
        }
      }
  return true;
}

// 13. Boolean scheme stays boolean and matches full expansion.
bool c13(std::string& detail) {
  auto schema = SchemaSpec::boolean_b();
  BigNat fuel(10000000);
  for (std::int64_t x = -4; x <= 8; ++x)
    for (std::int64_t y = -4; y <= 8; ++y)
      for (std::int64_t z = -4; z <= 8; ++z) {
        std::int64_t v = boolean_b_simple({x, y, z});
        std::int64_t args[3] = {x, y, z};
        auto o = evaluate(schema, args, Strategy::FullExpansion, fuel);
        if ((v != 0 && v != 1) || o.kind != EvalOutcome::Kind::Value ||
            o.value != v) {
          detail = "(" + std::to_string(x) + "," + std::to_string(y) + "," +
                   std::to_string(z) + ")";
          return false;
        }
      }
  return true;
}

// 14. Totality classifier vs the cycle-detecting evaluator, all 64 probes.
bool c14(std::string& detail) { return suite_ok("lemma4", detail); }

// 15. Completions, the k_c family, and the partial k scheme.
bool c15(std::string& detail) {
  auto base = [](const Triple& t) { return (t[0] & 1) != 0 ? 0 : 1; };
  for (int tag = 0; tag <= 3; ++tag) {
    auto fn = [tag](const Triple& t) { return ve_completion(tag, t); };
    auto check = recurrence_substitution_check(fn, base, {-6, 6});
    if (!check.ok) {
      detail = "completion tag " + std::to_string(tag);
      return false;
    }
  }
  return suite_ok("theorem3", detail);
}

// 16. The two incompletable auxiliary functions.
bool c16(std::string& detail) {
  HSpec poly;
  poly.def = HSpec::Default::Poly2xy;
  auto r = fixedpoint_search(poly, {0, 5}, -5, 40, BigNat(200000));
  bool chain_16 = false;
  for (const auto& step : r.chain)
    if (step.find("16") != std::string::npos) chain_16 = true;
  if (r.kind != FixedpointResult::Kind::Inconsistent ||
      !r.self_offset.has_value() || *r.self_offset != 16 || !chain_16) {
    detail = "polynomial h";
    return false;
  }
  HSpec bounded;
  bounded.def = HSpec::Default::BoundedContrived;
  auto b = fixedpoint_search(bounded, {0, 4}, -2, 10, BigNat(200000));
  if (b.kind != FixedpointResult::Kind::Inconsistent ||
      b.candidate_sweep.empty()) {
    detail = "bounded contrived h";
    return false;
  }
  for (auto& [c, rc] : b.candidate_sweep)
    if (c == rc) {
      detail = "bounded contrived h admits a fixed candidate";
      return false;
    }
  return true;
}

// 17. The m-dimensional fixed point and call-by-need termination.
bool c17(std::string& detail) {
  if (theorem4_verify(4, 0, 6).has_value() ||
      theorem4_verify(5, 0, 4).has_value()) {
    detail = "fixed point identity failed on a box";
    return false;
  }
  MTuple counter{5, 3, 2, 0, 1};
  if (f_m(counter) != 2 || u_function(counter) != 1) {
    detail = "(5,3,2,0,1)";
    return false;
  }
  MTuple t(5);
  for (t[0] = 0; t[0] <= 5; ++t[0])
    for (t[1] = 0; t[1] <= 5; ++t[1])
      for (t[2] = 0; t[2] <= 5; ++t[2])
        for (t[3] = 0; t[3] <= 5; ++t[3])
          for (t[4] = 0; t[4] <= 5; ++t[4]) {
            auto o = takm_lazy(t, BigNat(1000000));
            if (o.kind != EvalOutcome::Kind::Value || o.value != f_m(t)) {
              detail = "lazy evaluation at (" + std::to_string(t[0]) + ",...)";
              return false;
            }
          }
  return true;
}

}  // namespace

int main() {
  struct Criterion {
    const char* label;
    std::function<bool(std::string&)> check;
  };
  const std::vector<Criterion> criteria = {
      {"sequence tables V_n, T_n for n=1..9", c01},
      {"91 property on [-1000, 200] via four routes", c02},
      {"expansion count F(x) = 9192 - 91x", c03},
      {"generalized-91 termination grid", c04},
      {"totalExpansions = 1 + 4 T on [-3..8]^3", c05},
      {"lattice-path formula and Catalan partial sums", c06},
      {"T_n sequence vs direct count, n <= 7", c07},
      {"call-by-need closed forms on [-2..9]^3", c08},
      {"bell(n) <= T_n < 3 n! for n <= 40", c09},
      {"generating-function identities to order 16", c10},
      {"asymptotic error < 0.1 at n=100, smaller at n=400", c11},
      {"Gabriel scheme: g(18,12,6)=7 and box agreement", c12},
      {"boolean scheme box agreement, outputs in {0,1}", c13},
      {"totality classifier vs evaluator, 64 probes", c14},
      {"completions and k_c substitution; partial k diverges", c15},
      {"incompletable auxiliary functions detected", c16},
      {"m-dimensional fixed point and lazy termination", c17},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = false;
    try {
      ok = criteria[i].check(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << (i + 1) << ": "
              << criteria[i].label << " (" << ms << " ms)";
    if (!ok && !detail.empty()) std::cout << " -- " << detail;
    std::cout << "\n";
    if (!ok) ++failures;
  }
  if (failures) {
    std::cout << failures << " criterion(s) failed\n";
    return 1;
  }
  std::cout << "all 17 criteria passed\n";
  return 0;
}
