#include "verify.hpp"

#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

#include "combinatorics.hpp"
#include "eval_core.hpp"
#include "mccarthy91.hpp"
#include "takeuchi3.hpp"
#include "takeuchi_m.hpp"
#include "variants.hpp"

namespace recurselab {

namespace {

// Small helper collecting checks and remembering the first failure.
struct Checker {
  SuiteResult r;

  explicit Checker(std::string suite) { r.suite = std::move(suite); }

  template <typename... Parts>
  void expect(bool cond, const Parts&... parts) {
    ++r.checked;
    if (cond || !r.witness.empty()) return;
    std::ostringstream s;
    (s << ... << parts);
    r.witness = s.str();
  }

  SuiteResult finish() {
    r.ok = r.witness.empty();
    return std::move(r);
  }
};

SuiteResult suite_lemma1(const VerifyOptions& opt) {
  auto [lo, hi] = opt.range.value_or(std::make_pair<std::int64_t>(-500, 150));
  Checker c("lemma1");
  for (std::int64_t x = lo; x <= hi; ++x) {
    BigNat closed = f91_cost_closed(x);
    BigNat rec = f91_cost_recurrence(x);
    c.expect(closed == rec, "F(", x, "): closed ", closed, " != recurrence ", rec);
  }
  return c.finish();
}

SuiteResult suite_theorem1(const VerifyOptions& opt) {
  Checker c("theorem1");
  for (std::int64_t a : {std::int64_t{0}, std::int64_t{100}})
    for (std::int64_t b = 1; b <= 4; ++b)
      for (std::int64_t cc = 1; cc <= 4; ++cc)
        for (std::int64_t d = 1; d <= 13; ++d) {
          Gen91Params p{Rational(a), Rational(b), cc, Rational(d)};
          bool total = gen91_is_total(p);
          c.expect(total == ((cc - 1) * b < d), "totality mismatch a=", a,
                   " b=", b, " c=", cc, " d=", d);
          auto schema = SchemaSpec::generalized91(p);
          if (total) {
            for (std::int64_t x = a - 3 * d; x <= a + 3; ++x) {
              Rational closed = gen91_closed(p, Rational(x));
              Rational simpl = gen91_simplified(p, Rational(x), opt.fuel);
              std::int64_t args[1] = {x};
              auto out = evaluate(schema, args, Strategy::FullExpansion, opt.fuel);
              bool ok = out.kind == EvalOutcome::Kind::Value &&
                        Rational(out.value) == closed && simpl == closed;
              c.expect(ok, "route disagreement at a=", a, " b=", b, " c=", cc,
                       " d=", d, " x=", x);
              if (!ok) return c.finish();
            }
          } else {
            // The proof's window: expansion loops for a-b < x <= a.
            std::int64_t args[1] = {a};
            auto out = evaluate(schema, args, Strategy::FullExpansion,
                                BigNat(100000));
            c.expect(out.kind != EvalOutcome::Kind::Value,
                     "non-total scheme terminated: a=", a, " b=", b, " c=", cc,
                     " d=", d);
          }
        }
  return c.finish();
}

SuiteResult suite_theorem3(const VerifyOptions& opt) {
  Checker c("theorem3");
  TripleBox box{-4, 6};
  for (std::int64_t cc = -3; cc <= 5; ++cc) {
    auto fn = [cc](const Triple& t) { return kc_function(cc, t); };
    auto base = [](const Triple& t) { return t[0]; };
    auto check = recurrence_substitution_check(fn, base, box);
    c.expect(check.ok, "k_c substitution failed: c=", cc, " at (",
             check.witness[0], ",", check.witness[1], ",", check.witness[2], ")");
  }
  // Corollary: for x > y, c = y gives y; c = y - 1 does not.
  for (std::int64_t y = -3; y <= 4; ++y)
    for (std::int64_t x = y + 1; x <= y + 4; ++x)
      for (std::int64_t z = -3; z <= 4; ++z) {
        c.expect(kc_function(y, Triple{x, y, z}) == y, "corollary c=y at (", x,
                 ",", y, ",", z, ")");
        c.expect(kc_function(y - 1, Triple{x, y, z}) != y,
                 "corollary c=y-1 at (", x, ",", y, ",", z, ")");
      }
  // And the k scheme itself never reaches a value above the base region.
  auto demo = k_partial_demo(2, opt.fuel);
  c.expect(demo.kind != EvalOutcome::Kind::Value, "k(3,2,2) produced a value");
  return c.finish();
}

SuiteResult suite_theorem4(const VerifyOptions&) {
  Checker c("theorem4");
  struct Case {
    int m;
    std::int64_t lo, hi;
  };
  for (auto [m, lo, hi] : {Case{3, -4, 6}, Case{4, 0, 6}, Case{5, 0, 4}}) {
    auto witness = theorem4_verify(m, lo, hi);
    std::ostringstream w;
    if (witness) {
      w << "(";
      for (std::size_t i = 0; i < witness->size(); ++i)
        w << (i ? "," : "") << (*witness)[i];
      w << ")";
    }
    c.expect(!witness, "identity fails for m=", m, " at ", w.str());
  }
  std::int64_t probe[5] = {5, 3, 2, 0, 1};
  c.expect(f_m(probe) == 2, "f_5(5,3,2,0,1) != 2");
  c.expect(u_function(probe) == 1, "u(5,3,2,0,1) != 1");
  return c.finish();
}

SuiteResult suite_lemma4(const VerifyOptions&) {
  Checker c("lemma4");
  const Triple probes[6] = {{0, 0, 0}, {-1, 0, 1}, {-1, 1, 0},
                            {0, 0, 1}, {0, 1, 0}, {-1, 1, 1}};
  for (unsigned bits = 0; bits < 64; ++bits) {
    HSpec h;
    h.def = HSpec::Default::Zero;
    for (int i = 0; i < 6; ++i)
      h.entries[probes[static_cast<std::size_t>(i)]] = (bits >> i) & 1u;
    TotalityVerdict verdict = vh_classify_boolean(h);
    auto schema = SchemaSpec::vh(h);
    bool terminates = true;
    for (Triple t : {Triple{1, 0, 0}, Triple{1, 0, 1}}) {
      auto out = evaluate(schema, t, Strategy::FullExpansion, BigNat(100000));
      if (out.kind != EvalOutcome::Kind::Value) terminates = false;
    }
    c.expect((verdict == TotalityVerdict::Total) == terminates,
             "assignment ", bits, ": verdict ", verdict_name(verdict),
             " vs evaluator ", terminates ? "terminates" : "diverges");
  }
  return c.finish();
}

SuiteResult suite_gf(const VerifyOptions& opt) {
  Checker c("gf");
  c.expect(gf_functional_equation_residual(opt.order).is_zero(),
           "functional-equation residual nonzero at order ", opt.order);
  c.expect(v_series_identity_residual(opt.order).is_zero(),
           "V series residual nonzero at order ", opt.order);
  return c.finish();
}

SuiteResult suite_bounds(const VerifyOptions& opt) {
  auto [lo, hi] = opt.range.value_or(std::make_pair<std::int64_t>(1, 40));
  Checker c("bounds");
  for (const BoundsRow& row : bounds_check(hi)) {
    if (row.n < lo) continue;
    c.expect(row.bell_le_tn, "bell(n) > T_n at n=", row.n);
    c.expect(row.tn_lt_3fact, "T_n >= 3 n! at n=", row.n);
    c.expect(row.vn1_le_4n, "V_{n+1} > 4^n at n=", row.n);
  }
  return c.finish();
}

SuiteResult suite_kclosed(const VerifyOptions&) {
  Checker c("kclosed");
  for (std::int64_t x = -2; x <= 9; ++x)
    for (std::int64_t y = -2; y <= 9; ++y)
      for (std::int64_t z = -2; z <= 9; ++z) {
        Triple t{x, y, z};
        BigNat lazy = K_count_lazy(t);
        BigNat closed = K_closed(t);
        c.expect(lazy == closed, "K mismatch at (", x, ",", y, ",", z, "): lazy ",
                 lazy, " closed ", closed);
      }
  return c.finish();
}

SuiteResult suite_vclosed(const VerifyOptions&) {
  Checker c("vclosed");
  for (std::int64_t x = 2; x <= 8; ++x)
    for (std::int64_t y = 1; y < x; ++y) {
      BigNat direct = V_count(Triple{x, y, 0});
      BigNat closed = V_closed(x, y);
      c.expect(direct == closed, "V mismatch at (", x, ",", y, ",0)");
    }
  Sequences s = sequences(30);
  BigNat partial = 0;
  for (std::int64_t n = 1; n <= 30; ++n) {
    partial += catalan(n);
    c.expect(s.vn[static_cast<std::size_t>(n)] == partial,
             "V_n != Catalan partial sum at n=", n);
  }
  return c.finish();
}

}  // namespace

std::vector<std::string> verify_suite_names() {
  return {"lemma1", "theorem1", "theorem3", "theorem4", "lemma4",
          "gf",     "bounds",   "kclosed",  "vclosed"};
}

SuiteResult run_verify_suite(const std::string& name, const VerifyOptions& opt) {
  static const std::map<std::string,
                        std::function<SuiteResult(const VerifyOptions&)>>
      suites = {
          {"lemma1", suite_lemma1},   {"theorem1", suite_theorem1},
          {"theorem3", suite_theorem3}, {"theorem4", suite_theorem4},
          {"lemma4", suite_lemma4},   {"gf", suite_gf},
          {"bounds", suite_bounds},   {"kclosed", suite_kclosed},
          {"vclosed", suite_vclosed},
      };
  auto it = suites.find(name);
  if (it == suites.end())
    throw std::invalid_argument("unknown verification suite: " + name);
  return it->second(opt);
}

}  // namespace recurselab
