#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>

#include "finquat/genfibquat.hpp"
#include "finquat/fibquat.hpp"

using namespace finquat;

TEST_CASE("blended sequence values") {
  // Pure Lucas: p = 0, q = 1.
  GflParams lucas{0, 1};
  CHECK(gfl_number(lucas, 0, 5).value() == 2);
  CHECK(gfl_number(lucas, 1, 5).value() == 1);
  CHECK(gfl_number(lucas, 2, 5).value() == 3);
  CHECK(gfl_number(lucas, 3, 5).value() == 4);

  // Shifted Fibonacci: p = 1, q = 0 gives f_{n-1}.
  GflParams fib{1, 0};
  CHECK(gfl_number(fib, 0, 100).value() == 1);  // f_{-1}
  CHECK(gfl_number(fib, 1, 100).value() == 0);
  CHECK(gfl_number(fib, 7, 100).value() == 8);

  GflParams both{2, 1};
  CHECK(gfl_number(both, 0, 1000).value() == 4);  // 2 f_{-1} + l_0
  CHECK_THROWS_AS(gfl_number(both, -1, 7), domain_error);

  // Negative coefficients reduce into the ring first.
  GflParams neg{-1, 2};
  CHECK(gfl_number(neg, 2, 7).value() == (6 * 1 + 2 * 3) % 7);
}

TEST_CASE("quaternion coordinates and specialization to fibonacci") {
  GflParams both{2, 1};
  CHECK(gfl_quaternion(both, 0, 2).coords() == std::array<std::int64_t, 4>{0, 1, 1, 0});

  // g^{1,0}_{n+1} = f_n, so G^{1,0}_{n+1} = F_n.
  GflParams fib{1, 0};
  for (std::int64_t p : {2, 3, 5, 7, 13}) {
    for (std::int64_t n = 0; n <= 50; ++n) {
      CHECK(gfl_quaternion(fib, n + 1, p) == fib_quaternion(n, p));
    }
  }
  CHECK_THROWS_AS(gfl_quaternion(both, 0, 6), domain_error);
}

TEST_CASE("norm closed form") {
  GflParams both{2, 1};
  CHECK(gfl_norm(both, 0, 79).value() == 78);  // exact value 78, one below the modulus
  CHECK(gfl_norm(both, 0, 1009).value() == 78);

  GflParams fib{1, 0};
  for (std::int64_t n = 0; n <= 40; ++n) {
    CHECK(gfl_norm(fib, n + 1, 13) == fib_quat_norm(n, 13));
  }

  // Componentwise norm equals the closed form across a coefficient grid.
  for (std::int64_t pc = -2; pc <= 3; ++pc) {
    for (std::int64_t qc = -2; qc <= 3; ++qc) {
      GflParams params{pc, qc};
      for (std::int64_t r : {2, 3, 5, 7, 13}) {
        for (std::int64_t n = 0; n <= 40; ++n) {
          CHECK(norm(gfl_quaternion(params, n, r)) == gfl_norm(params, n, r));
        }
      }
    }
  }
}

TEST_CASE("classification by norm with rule cross-check") {
  CHECK(classify_gfl({2, 1}, 3, 2).verdict == Verdict::ZeroDivisor);   // n = 0 (mod 3)
  CHECK(classify_gfl({2, 1}, 1, 2).verdict == Verdict::Unit);
  CHECK(classify_gfl({1, 2}, 1, 5).verdict == Verdict::ZeroDivisor);   // pair (1, 2)
  CHECK(classify_gfl({3, 5}, 2, 5).verdict == Verdict::ZeroDivisor);   // q = 0 (mod 5)
  CHECK(classify_gfl({1, 1}, 0, 3).verdict == Verdict::ZeroDivisor);   // all n at r = 3

  // Coefficients that vanish mod r give the zero element, kept distinct from
  // zero divisors.
  Classification zero = classify_gfl({5, 5}, 2, 5);
  CHECK(zero.verdict == Verdict::Zero);
  CHECK(zero.norm_value.is_zero());
}

TEST_CASE("zero-divisor conditions by modulus") {
  auto cls = [](GflCondition c) { return std::pair(c.modulus, c.residue); };

  CHECK(cls(gfl_zero_divisor_condition({2, 1}, 2)) == std::pair<std::int64_t, std::int64_t>(3, 0));
  CHECK(gfl_zero_divisor_condition({2, 1}, 2).rule == "Prop 3.2 i");
  CHECK(cls(gfl_zero_divisor_condition({1, 2}, 2)) == std::pair<std::int64_t, std::int64_t>(3, 1));
  CHECK(gfl_zero_divisor_condition({2, 4}, 2).kind == GflConditionKind::all_indices);
  CHECK(cls(gfl_zero_divisor_condition({1, 3}, 2)) == std::pair<std::int64_t, std::int64_t>(3, 2));

  CHECK(gfl_zero_divisor_condition({7, -2}, 3).kind == GflConditionKind::all_indices);
  CHECK(gfl_zero_divisor_condition({7, -2}, 3).rule == "Prop 3.3");

  CHECK(gfl_zero_divisor_condition({5, 2}, 5).kind == GflConditionKind::all_indices);
  CHECK(cls(gfl_zero_divisor_condition({1, 1}, 5)) == std::pair<std::int64_t, std::int64_t>(5, 4));
  CHECK(cls(gfl_zero_divisor_condition({7, 3}, 5)) == std::pair<std::int64_t, std::int64_t>(5, 0));
  CHECK(gfl_zero_divisor_condition({7, 3}, 5).rule == "Prop 3.4 iii");
  CHECK(cls(gfl_zero_divisor_condition({1, 2}, 5)) == std::pair<std::int64_t, std::int64_t>(5, 1));
  CHECK(cls(gfl_zero_divisor_condition({4, 2}, 5)) == std::pair<std::int64_t, std::int64_t>(5, 3));
  CHECK(cls(gfl_zero_divisor_condition({3, 5}, 5)) == std::pair<std::int64_t, std::int64_t>(5, 2));

  GflCondition t31 = gfl_zero_divisor_condition({13, 3}, 13);
  CHECK(t31.kind == GflConditionKind::entry_point_class);
  CHECK(t31.modulus == 7);
  CHECK(t31.residue == 2);
  CHECK(t31.index_for(0) == 2);
  CHECK(t31.index_for(1) == 9);

  GflCondition t32 = gfl_zero_divisor_condition({3, 13}, 13);
  CHECK(t32.modulus == 7);
  CHECK(t32.residue == 3);
  CHECK(t32.index_for(0) == 3);
  CHECK(t32.index_for(1) == 10);

  // Even entry point: no solutions. z(7) = 8.
  GflCondition none = gfl_zero_divisor_condition({7, 3}, 7);
  CHECK(none.kind == GflConditionKind::no_solutions);
  CHECK_FALSE(none.predicts_zero_norm(0));

  CHECK_THROWS_AS(gfl_zero_divisor_condition({2, 1}, 11), unsupported_case_error);
  CHECK_THROWS_AS(gfl_zero_divisor_condition({13, 13}, 13), unsupported_case_error);
  CHECK_THROWS_AS(gfl_zero_divisor_condition({13, 4}, 13), unsupported_case_error);
}

TEST_CASE("conditions agree with per-index norms over a horizon") {
  for (std::int64_t pc = -2; pc <= 3; ++pc) {
    for (std::int64_t qc = -2; qc <= 3; ++qc) {
      GflParams params{pc, qc};
      for (std::int64_t r : {2, 3, 5}) {
        GflCondition cond = gfl_zero_divisor_condition(params, r);
        for (std::int64_t n = 0; n < 60; ++n) {
          CHECK(cond.predicts_zero_norm(n) == gfl_norm(params, n, r).is_zero());
        }
      }
    }
  }
  const std::pair<GflParams, std::int64_t> instances[] = {
      {{13, 3}, 13}, {{3, 13}, 13}, {{17, 7}, 17}, {{7, 17}, 17}};
  for (const auto& [params, r] : instances) {
    GflCondition cond = gfl_zero_divisor_condition(params, r);
    for (std::int64_t n = 0; n < 60; ++n) {
      CHECK(cond.predicts_zero_norm(n) == gfl_norm(params, n, r).is_zero());
    }
  }
}
