#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <thread>
#include <vector>

#include "finquat/fibseq.hpp"

using namespace finquat;

TEST_CASE("fib_mod values and index domain") {
  CHECK(fib_mod(10, 1000).value() == 55);
  CHECK(fib_mod(21, 13).value() == 0);  // f_21 = 10946 = 13 * 842
  CHECK(fib_mod(-1, 7).value() == 1);
  CHECK(fib_mod(0, 7).value() == 0);
  CHECK(fib_mod(1, 7).value() == 1);
  CHECK_THROWS_AS(fib_mod(-2, 7), domain_error);
  CHECK_THROWS_AS(fib_mod(3, 1), domain_error);
}

TEST_CASE("fast doubling matches naive iteration") {
  for (std::int64_t m : {2, 3, 5, 7, 13, 97, 1000}) {
    std::int64_t a = 0, b = 1 % m;
    for (std::int64_t n = 0; n <= 2000; ++n) {
      CHECK(fib_mod(n, m).value() == a);
      FibPair fp = fib_pair_mod(n, m);
      CHECK(fp.f_n.value() == a);
      CHECK(fp.f_n_plus_1.value() == b);
      std::int64_t next = (a + b) % m;
      a = b;
      b = next;
    }
  }
}

TEST_CASE("lucas numbers from the adjacent fibonacci pair") {
  CHECK(lucas_mod(0, 10).value() == 2);
  CHECK(lucas_mod(3, 2).value() == 0);  // l_3 = 4
  CHECK(lucas_mod(4, 100).value() == 7);
  CHECK_THROWS_AS(lucas_mod(-1, 7), domain_error);
  // l_n = f_{n-1} + f_{n+1} for n >= 1.
  for (std::int64_t n = 1; n <= 200; ++n) {
    std::int64_t m = 1009;
    CHECK(lucas_mod(n, m) == fib_mod(n - 1, m) + fib_mod(n + 1, m));
  }
}

TEST_CASE("pisano periods of small moduli") {
  CHECK(pisano_period(2) == 3);
  CHECK(pisano_period(3) == 8);
  CHECK(pisano_period(5) == 20);
  CHECK(pisano_period(7) == 16);
  CHECK(pisano_period(10) == 60);
  CHECK_THROWS_AS(pisano_period(1), domain_error);
  CHECK_THROWS_AS(pisano_period(2'000'000), resource_limit_error);
  CHECK(pisano_period(2'000'000, 3'000'000) > 0);  // explicit guardrail override
}

TEST_CASE("entry points of small primes") {
  CHECK(entry_point(2) == 3);
  CHECK(entry_point(3) == 4);
  CHECK(entry_point(5) == 5);
  CHECK(entry_point(7) == 8);
  CHECK(entry_point(11) == 10);
  CHECK(entry_point(13) == 7);
  CHECK_THROWS_AS(entry_point(10), domain_error);
  CHECK_THROWS_AS(entry_point(1), domain_error);
}

TEST_CASE("period info ties k to z") {
  PeriodInfo p5 = period_info(5);
  CHECK(p5.entry_point == 5);
  CHECK(p5.pisano_period == 20);
  CHECK(p5.relation == PeriodRelation::k_equals_4z);

  CHECK(period_info(2).relation == PeriodRelation::k_equals_z);
  CHECK(period_info(7).relation == PeriodRelation::k_equals_2z);   // z = 8
  CHECK(period_info(11).relation == PeriodRelation::k_equals_z);   // z = 10
  CHECK(period_info(13).relation == PeriodRelation::k_equals_4z);  // z = 7
  CHECK_THROWS_AS(period_info(12), domain_error);

  // z | k and the mod 4 rule across a range of primes.
  for (std::int64_t p = 3; p <= 300; p += 2) {
    if (!is_prime(p)) continue;
    PeriodInfo info = period_info(p);
    CHECK(info.pisano_period % info.entry_point == 0);
    std::int64_t ratio = info.pisano_period / info.entry_point;
    if (info.entry_point % 2 == 1) CHECK(ratio == 4);
    if (info.entry_point % 4 == 2) CHECK(ratio == 1);
    if (info.entry_point % 4 == 0) CHECK(ratio == 2);
  }
}

TEST_CASE("fibonacci cycles match the frozen small-modulus values") {
  auto values = [](const std::vector<Residue>& xs) {
    std::vector<std::int64_t> out;
    for (const Residue& x : xs) out.push_back(x.value());
    return out;
  };
  CHECK(values(fib_cycle(2)) == std::vector<std::int64_t>{0, 1, 1});
  CHECK(values(fib_cycle(3)) == std::vector<std::int64_t>{0, 1, 1, 2, 0, 2, 2, 1});
  CHECK(values(fib_cycle(5)) ==
        std::vector<std::int64_t>{0, 1, 1, 2, 3, 0, 3, 3, 1, 4, 0, 4, 4, 3, 2, 0, 2, 2, 4, 1});
}

TEST_CASE("entry point divides exactly the indices of zero values") {
  for (std::int64_t p : {2, 3, 5, 7, 11, 13}) {
    PeriodInfo info = period_info(p);
    for (std::int64_t n = 1; n <= 3 * info.pisano_period; ++n) {
      CHECK((fib_mod(n, p).value() == 0) == (n % info.entry_point == 0));
    }
  }
}

TEST_CASE("half-period congruence") {
  SunCongruence s13 = sun_congruence_check(13);
  CHECK(s13.holds);
  CHECK(s13.lhs.value() == 0);  // p = 1 (mod 4)
  CHECK(s13.rhs.value() == 0);

  SunCongruence s7 = sun_congruence_check(7);
  CHECK(s7.holds);
  CHECK(s7.lhs.value() == 3);
  CHECK(s7.rhs.value() == 3);

  SunCongruence s11 = sun_congruence_check(11);
  CHECK(s11.holds);
  CHECK(s11.lhs.value() == 5);

  CHECK_THROWS_AS(sun_congruence_check(2), domain_error);
  CHECK_THROWS_AS(sun_congruence_check(5), domain_error);
  CHECK_THROWS_AS(sun_congruence_check(15), domain_error);

  for (std::int64_t p = 3; p < 200; p += 2) {
    if (!is_prime(p) || p == 5) continue;
    CHECK(sun_congruence_check(p).holds);
  }
}

TEST_CASE("period cache is transparent and safe under concurrent use") {
  PeriodInfoCache cache;
  for (std::int64_t p : {2, 3, 5, 7, 11, 13, 17}) {
    CHECK(cache.info(p) == period_info(p));
    CHECK(cache.info(p) == period_info(p));  // second hit serves the memo
  }
  std::vector<std::thread> workers;
  std::array<bool, 8> ok{};
  for (std::size_t t = 0; t < ok.size(); ++t) {
    workers.emplace_back([&cache, &ok, t] {
      bool good = true;
      for (int round = 0; round < 50; ++round) {
        for (std::int64_t p : {2, 3, 5, 7, 11, 13, 17, 29, 37}) {
          good = good && cache.info(p) == period_info(p);
        }
      }
      ok[t] = good;
    });
  }
  for (std::thread& w : workers) w.join();
  for (bool good : ok) CHECK(good);
}
