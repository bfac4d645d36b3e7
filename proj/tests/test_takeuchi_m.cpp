#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <vector>

#include "takeuchi3.hpp"
#include "takeuchi_m.hpp"

using namespace recurselab;

namespace {

// The displayed 4-dimensional simple mapping.
std::int64_t simple4(std::int64_t w, std::int64_t x, std::int64_t y,
                     std::int64_t z) {
  if (w <= x) return x;
  if (x <= y) return y;
  if (y <= z) return z;
  return w;
}

}  // namespace

TEST_CASE("first rise and u") {
  MTuple counter{5, 3, 2, 0, 1};
  auto k = first_rise(counter);
  REQUIRE(k.has_value());
  CHECK(*k == 4);
  CHECK(u_function(counter) == 1);

  MTuple rise_at_one{1, 2, 3};
  CHECK(first_rise(rise_at_one) == 1);
  MTuple strictly_down{9, 7, 5, 3};
  CHECK_FALSE(first_rise(strictly_down).has_value());
  MTuple t042{0, 4, 2};
  CHECK(u_function(t042) == 4);
  MTuple t6543{6, 5, 4, 3};
  CHECK(u_function(t6543) == 6);
}

TEST_CASE("g auxiliaries") {
  MTuple g2{7, -2};
  CHECK(g_aux(g2) == -2);
  MTuple g5{5, 3, 2, 0, 1};
  CHECK(g_aux(g5) == 2);
  MTuple g3{4, 3, 9};
  CHECK(g_aux(g3) == 9);  // x1 = x2 + 1, delegates to g_2(3, 9)
  MTuple g1{1};
  CHECK_THROWS_AS(g_aux(g1), std::invalid_argument);
}

TEST_CASE("f_m collapses to the simple forms in low dimensions") {
  for (std::int64_t x = -5; x <= 8; ++x)
    for (std::int64_t y = -5; y <= 8; ++y)
      for (std::int64_t z = -5; z <= 8; ++z) {
        MTuple t{x, y, z};
        CHECK(f_m(t) == tak_simple(Triple{x, y, z}));
      }
  for (std::int64_t w = -3; w <= 6; ++w)
    for (std::int64_t x = -3; x <= 6; ++x)
      for (std::int64_t y = -3; y <= 6; ++y)
        for (std::int64_t z = -3; z <= 6; ++z) {
          MTuple t{w, x, y, z};
          CHECK(f_m(t) == simple4(w, x, y, z));
        }
}

TEST_CASE("the u conjecture fails in five dimensions") {
  MTuple t{5, 3, 2, 0, 1};
  CHECK(f_m(t) == 2);
  CHECK(u_function(t) == 1);
}

TEST_CASE("fixed point identity holds on boxes") {
  CHECK_FALSE(theorem4_verify(3, -4, 6).has_value());
  CHECK_FALSE(theorem4_verify(4, 0, 6).has_value());
  CHECK_FALSE(theorem4_verify(5, 0, 4).has_value());
  CHECK_FALSE(theorem4_verify(6, 0, 3).has_value());
  // A shifted box, since translation invariance is not assumed.
  CHECK_FALSE(theorem4_verify(4, -9, -3).has_value());
}

TEST_CASE("call-by-need evaluation") {
  auto out = takm_lazy({5, 3, 2, 0, 1}, BigNat(1000000));
  REQUIRE(out.kind == EvalOutcome::Kind::Value);
  CHECK(out.value == 2);

  out = takm_lazy({0, 1, 2, 3}, BigNat(1000));
  REQUIRE(out.kind == EvalOutcome::Kind::Value);
  CHECK(out.value == 1);
  CHECK(out.cost.else_expansions == 0);

  out = takm_lazy({4, 2, 0, 3}, BigNat(1000000));
  MTuple probe{4, 2, 0, 3};
  REQUIRE(out.kind == EvalOutcome::Kind::Value);
  CHECK(out.value == f_m(probe));

  // Terminates and matches f_m across a 5-dimensional box.
  MTuple t(5);
  for (t[0] = 0; t[0] <= 4; ++t[0])
    for (t[1] = 0; t[1] <= 4; ++t[1])
      for (t[2] = 0; t[2] <= 4; ++t[2])
        for (t[3] = 0; t[3] <= 4; ++t[3])
          for (t[4] = 0; t[4] <= 4; ++t[4]) {
            auto o = takm_lazy(t, BigNat(1000000));
            REQUIRE(o.kind == EvalOutcome::Kind::Value);
            CHECK(o.value == f_m(t));
          }
}

TEST_CASE("full-expansion cost recurrence") {
  for (std::int64_t n = 1; n <= 6; ++n) {
    auto out = takm_full_cost({n, 0, n + 1}, BigNat(10000000));
    REQUIRE(out.kind == EvalOutcome::Kind::Value);
    CHECK(out.cost.else_expansions == T_count({n, 0, n + 1}));
    CHECK(out.cost.total_expansions == 1 + 4 * out.cost.else_expansions);
  }
  auto four = takm_full_cost({2, 0, 1, 3}, BigNat(10000000));
  REQUIRE(four.kind == EvalOutcome::Kind::Value);
  CHECK(four.value == 1);
  CHECK(four.cost.else_expansions == 4);  // regression baseline

  auto five = takm_full_cost({5, 3, 2, 0, 1}, BigNat(10000000));
  REQUIRE(five.kind == EvalOutcome::Kind::Value);
  CHECK(five.value == 2);
  CHECK(five.cost.else_expansions == 46);  // regression baseline
}

TEST_CASE("raw nested expansion agrees for m = 3") {
  for (std::int64_t n = 1; n <= 5; ++n) {
    auto raw = takm_full_cost({n, 0, n + 1}, BigNat(10000000), true);
    REQUIRE(raw.kind == EvalOutcome::Kind::Value);
    CHECK(raw.value == tak_simple(Triple{n, 0, n + 1}));
    CHECK(raw.cost.else_expansions == T_count({n, 0, n + 1}));
  }
  auto tiny = takm_full_cost({1, 0, 2, 1}, BigNat(100000), true);
  if (tiny.kind == EvalOutcome::Kind::Value) {
    MTuple t{1, 0, 2, 1};
    CHECK(tiny.value == f_m(t));
  }
}

TEST_CASE("fuel is honored") {
  auto out = takm_full_cost({9, 0, 10}, BigNat(10));
  CHECK(out.kind == EvalOutcome::Kind::FuelExhausted);
  CHECK(out.cost.fuel_consumed == 10);
  MTuple bad{1, 2};
  CHECK_THROWS_AS(takm_full_cost(bad, BigNat(10)), std::invalid_argument);
}
