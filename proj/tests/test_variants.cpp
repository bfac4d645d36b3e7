#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <string>

#include "eval_core.hpp"
#include "takeuchi3.hpp"
#include "variants.hpp"

using namespace recurselab;

namespace {

EvalOutcome full(const SchemaSpec& s, const Triple& t,
                 BigNat fuel = BigNat(10000000)) {
  return evaluate(s, t, Strategy::FullExpansion, fuel);
}

bool chain_mentions(const FixedpointResult& r, const std::string& needle) {
  for (const auto& line : r.chain)
    if (line.find(needle) != std::string::npos) return true;
  return false;
}

}  // namespace

TEST_CASE("gabriel piecewise form matches full expansion") {
  CHECK(gabriel_simple({18, 12, 6}) == 7);
  CHECK(gabriel_simple({0, 4, 9}) == 9);
  CHECK(gabriel_simple({2, 1, 0}) == 1);
  auto schema = SchemaSpec::gabriel();
  for (std::int64_t x = -2; x <= 6; ++x)
    for (std::int64_t y = -2; y <= 6; ++y)
      for (std::int64_t z = -2; z <= 6; ++z) {
        auto out = full(schema, {x, y, z});
        REQUIRE(out.kind == EvalOutcome::Kind::Value);
        CHECK(out.value == gabriel_simple({x, y, z}));
      }
}

TEST_CASE("boolean scheme matches full expansion and stays boolean") {
  CHECK(boolean_b_simple({0, 0, 0}) == 0);
  CHECK(boolean_b_simple({0, 1, 1}) == 1);
  CHECK(boolean_b_simple({5, 1, 3}) == 1);
  auto schema = SchemaSpec::boolean_b();
  for (std::int64_t x = -4; x <= 6; ++x)
    for (std::int64_t y = -4; y <= 6; ++y)
      for (std::int64_t z = -4; z <= 6; ++z) {
        std::int64_t v = boolean_b_simple({x, y, z});
        CHECK((v == 0 || v == 1));
        auto out = full(schema, {x, y, z});
        REQUIRE(out.kind == EvalOutcome::Kind::Value);
        CHECK(out.value == v);
      }
}

TEST_CASE("totality classifier on named rules") {
  HSpec parity;
  parity.def = HSpec::Default::ParityX;
  CHECK(vh_classify_boolean(parity) == TotalityVerdict::DivergesCaseI);
  HSpec zero;
  CHECK(vh_classify_boolean(zero) == TotalityVerdict::Total);
  HSpec one;
  one.def = HSpec::Default::One;
  CHECK(vh_classify_boolean(one) == TotalityVerdict::Total);
  HSpec bad;
  bad.def = HSpec::Default::TakY;  // h(-1, 1, 0) = 1 but h(0, 1, 0) = 1 ... h(-1, 0, 1) = 0
  bad.entries[{0, 0, 0}] = 7;
  CHECK_THROWS_AS(vh_classify_boolean(bad), std::invalid_argument);
}

TEST_CASE("the four completions satisfy the recurrence") {
  auto base = [](const Triple& t) { return (t[0] & 1) != 0 ? 0 : 1; };
  CHECK(ve_completion(0b00, {2, 0, 0}) == 1);
  CHECK(ve_completion(0b01, {2, 0, 0}) == 1);
  CHECK(ve_completion(0b11, {3, 0, 5}) == 1);
  for (int tag = 0; tag <= 3; ++tag) {
    auto fn = [tag](const Triple& t) { return ve_completion(tag, t); };
    auto check = recurrence_substitution_check(fn, base, {-6, 6});
    CHECK(check.ok);
  }
  // The completions genuinely differ away from the base region.
  bool differ = false;
  for (std::int64_t x = -4; x <= 4 && !differ; ++x)
    for (std::int64_t y = -4; y <= 4 && !differ; ++y)
      for (std::int64_t z = -4; z <= 4 && !differ; ++z)
        if (ve_completion(0b00, {x, y, z}) != ve_completion(0b11, {x, y, z}))
          differ = true;
  CHECK(differ);
  CHECK_THROWS_AS(ve_completion(4, {0, 0, 0}), std::invalid_argument);
}

TEST_CASE("substitution check accepts tak and rejects a broken function") {
  auto base_y = [](const Triple& t) { return t[1]; };
  CHECK(recurrence_substitution_check(tak_simple, base_y, {-4, 8}).ok);
  auto broken = [](const Triple& t) { return t[0] + t[1]; };
  auto r = recurrence_substitution_check(broken, base_y, {-2, 2});
  CHECK_FALSE(r.ok);
}

TEST_CASE("k_c family") {
  CHECK(kc_function(5, {3, 5, 9}) == 3);
  CHECK(kc_function(5, {7, 3, 2}) == 5);
  CHECK(kc_function(4, {9, 6, 1}) == 4);
  auto base_x = [](const Triple& t) { return t[0]; };
  for (std::int64_t c = -3; c <= 5; ++c) {
    auto fn = [c](const Triple& t) { return kc_function(c, t); };
    CHECK(recurrence_substitution_check(fn, base_x, {-4, 6}).ok);
  }
  // Least-fixed-point corollary: c = y reproduces y, c = y - 1 does not.
  for (std::int64_t y = -2; y <= 3; ++y)
    for (std::int64_t x = y + 1; x <= y + 4; ++x)
      for (std::int64_t z = -2; z <= 3; ++z) {
        CHECK(kc_function(y, {x, y, z}) == y);
        CHECK(kc_function(y - 1, {x, y, z}) != y);
      }
}

TEST_CASE("the k scheme itself has no value above the base region") {
  for (std::int64_t x : {std::int64_t{2}, std::int64_t{4}}) {
    auto out = k_partial_demo(x, BigNat(100000));
    CHECK(out.kind != EvalOutcome::Kind::Value);
  }
}

TEST_CASE("v_h with h = 0 expands exactly the V tree") {
  HSpec zero;
  auto schema = SchemaSpec::vh(zero);
  for (std::int64_t x = -2; x <= 5; ++x)
    for (std::int64_t y = -2; y <= 5; ++y)
      for (std::int64_t z = -2; z <= 5; ++z) {
        auto out = full(schema, {x, y, z});
        REQUIRE(out.kind == EvalOutcome::Kind::Value);
        CHECK(out.value == 0);
        CHECK(out.cost.else_expansions == V_count({x, y, z}));
        CHECK(out.cost.total_expansions == 1 + 4 * out.cost.else_expansions);
      }
}

TEST_CASE("fixedpoint search: the polynomial h cannot be completed") {
  HSpec h;
  h.def = HSpec::Default::Poly2xy;
  auto r = fixedpoint_search(h, {0, 5}, -5, 40, BigNat(200000));
  REQUIRE(r.kind == FixedpointResult::Kind::Inconsistent);
  CHECK(r.root == Triple{2, 1, 4});
  REQUIRE(r.self_offset.has_value());
  CHECK(*r.self_offset == 16);
  CHECK(chain_mentions(r, "16"));
  CHECK(chain_mentions(r, "v_h(2,1,4)"));
}

TEST_CASE("fixedpoint search: the bounded contrived h cannot be completed") {
  HSpec h;
  h.def = HSpec::Default::BoundedContrived;
  auto r = fixedpoint_search(h, {0, 4}, -2, 10, BigNat(200000));
  REQUIRE(r.kind == FixedpointResult::Kind::Inconsistent);
  REQUIRE(!r.candidate_sweep.empty());
  for (auto& [c, rc] : r.candidate_sweep) CHECK(c != rc);
  CHECK(chain_mentions(r, "v_h(3, "));
}

TEST_CASE("fixedpoint search: takeuchi's own h is consistent") {
  HSpec h;
  h.def = HSpec::Default::TakY;
  auto r = fixedpoint_search(h, {0, 4}, -2, 10, BigNat(200000));
  REQUIRE(r.kind == FixedpointResult::Kind::Consistent);
  for (const auto& [t, v] : r.table) CHECK(v == tak_simple(t));
}

TEST_CASE("open problem 3 exploration finds no refutation at small scale") {
  auto report = open_problem3_explore(2, 3);
  CHECK(report.inconsistent == 0);
  bool saw_taky = false, saw_zero = false;
  for (const auto& e : report.entries) {
    if (e.h_name == "tak-y") {
      saw_taky = true;
      CHECK(e.kind == FixedpointResult::Kind::Consistent);
    }
    if (e.h_name == "zero") {
      saw_zero = true;
      CHECK(e.kind == FixedpointResult::Kind::Consistent);
    }
  }
  CHECK(saw_taky);
  CHECK(saw_zero);
}

TEST_CASE("gabriel growth stays under the reported exponential") {
  // G_n <= (3 + sqrt 8)^n, checked with the rational lower bound
  // 582842/100000 < 3 + sqrt 8.
  auto schema = SchemaSpec::gabriel();
  BigNat num = 1, den = 1;
  for (std::int64_t n = 1; n <= 9; ++n) {
    num *= 582842;
    den *= 100000;
    auto out = full(schema, {n, 0, n + 1}, BigNat(1) << 40);
    REQUIRE(out.kind == EvalOutcome::Kind::Value);
    CHECK(out.cost.else_expansions * den <= num);
  }
}
