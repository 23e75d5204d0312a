#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <vector>

#include "finquat/modarith.hpp"

using namespace finquat;

TEST_CASE("canonical representatives") {
  CHECK(Residue(-3, 7).value() == 4);
  CHECK(Residue(10, 5).value() == 0);
  CHECK(Residue(-1, 2).value() == 1);
  CHECK(Residue(0, 2).value() == 0);
  CHECK(Residue(-14, 7).value() == 0);
  CHECK_THROWS_AS(Residue(3, 1), domain_error);
  CHECK_THROWS_AS(Residue(3, 0), domain_error);
  CHECK_THROWS_AS(Residue(3, -5), domain_error);
}

TEST_CASE("ring operations stay canonical and respect the modulus") {
  Residue a(3, 7), b(5, 7);
  CHECK((a + b).value() == 1);
  CHECK((a - b).value() == 5);
  CHECK((a * b).value() == 1);
  CHECK((-a).value() == 4);
  CHECK((-Residue(0, 7)).value() == 0);
  CHECK_THROWS_AS(a + Residue(1, 5), domain_error);
  CHECK_THROWS_AS(a * Residue(1, 5), domain_error);
}

TEST_CASE("products do not overflow near the top of the integer range") {
  // Both operands close to a modulus near 2^62.
  std::int64_t m = (std::int64_t{1} << 62) - 57;
  Residue a(m - 1, m), b(m - 2, m);
  // (m-1)(m-2) = m^2 - 3m + 2 = 2 - 3m = 2 (mod m), i.e. (-1)(-2).
  CHECK((a * b).value() == 2);
  CHECK((a * a).value() == 1);
}

TEST_CASE("inverse by extended euclid, with gcd witness on failure") {
  CHECK(inverse(Residue(3, 7)).value() == 5);
  CHECK(inverse(Residue(1, 2)).value() == 1);
  CHECK(inverse(Residue(5, 12)).value() == 5);  // composite modulus is fine
  try {
    inverse(Residue(3, 6));
    FAIL("expected not_invertible_error");
  } catch (const not_invertible_error& e) {
    CHECK(e.gcd() == 3);
  }
  // Exhaustive: a * inverse(a) = 1 whenever gcd(a, m) = 1, m <= 60.
  for (std::int64_t m = 2; m <= 60; ++m) {
    for (std::int64_t a = 0; a < m; ++a) {
      std::int64_t g = std::gcd(a, m);
      if (g == 1) {
        CHECK((Residue(a, m) * inverse(Residue(a, m))).value() == 1 % m);
      } else {
        CHECK_THROWS_AS(inverse(Residue(a, m)), not_invertible_error);
      }
    }
  }
}

TEST_CASE("legendre symbol by euler criterion") {
  CHECK(legendre(13, 5) == -1);
  CHECK(legendre(11, 5) == 1);
  CHECK(legendre(10, 5) == 0);
  CHECK_THROWS_AS(legendre(3, 2), domain_error);
  CHECK_THROWS_AS(legendre(3, 9), domain_error);
  CHECK_THROWS_AS(legendre(3, 15), domain_error);

  // Against direct square enumeration for every odd prime p <= 97.
  for (std::int64_t p = 3; p <= 97; p += 2) {
    if (!is_prime(p)) continue;
    std::vector<bool> is_square(static_cast<std::size_t>(p), false);
    for (std::int64_t b = 0; b < p; ++b) is_square[static_cast<std::size_t>(b * b % p)] = true;
    for (std::int64_t a = 0; a < p; ++a) {
      int expect = a == 0 ? 0 : is_square[static_cast<std::size_t>(a)] ? 1 : -1;
      CHECK(legendre(a, p) == expect);
    }
  }
}

TEST_CASE("smallest two-square representation of -1") {
  auto check_pair = [](std::int64_t p, std::int64_t a, std::int64_t b) {
    auto [ra, rb] = two_square_root_of_minus_one(p);
    CHECK(ra.value() == a);
    CHECK(rb.value() == b);
  };
  check_pair(3, 1, 1);
  check_pair(5, 0, 2);
  check_pair(7, 2, 3);
  CHECK_THROWS_AS(two_square_root_of_minus_one(2), domain_error);
  CHECK_THROWS_AS(two_square_root_of_minus_one(15), domain_error);

  // Every odd prime p <= 97: the pair satisfies the equation, is ordered, and
  // is lexicographically least among all solutions.
  for (std::int64_t p = 3; p <= 97; p += 2) {
    if (!is_prime(p)) continue;
    auto [ra, rb] = two_square_root_of_minus_one(p);
    std::int64_t a = ra.value(), b = rb.value();
    CHECK((a * a + b * b + 1) % p == 0);
    CHECK(a <= b);
    bool smaller_exists = false;
    for (std::int64_t x = 0; x <= a && !smaller_exists; ++x) {
      for (std::int64_t y = x; y < (x == a ? b : p); ++y) {
        if ((x * x + y * y + 1) % p == 0) {
          smaller_exists = true;
          break;
        }
      }
    }
    CHECK_FALSE(smaller_exists);
  }
}

TEST_CASE("trial-division primality") {
  CHECK_FALSE(is_prime(0));
  CHECK_FALSE(is_prime(1));
  CHECK(is_prime(2));
  CHECK(is_prime(3));
  CHECK_FALSE(is_prime(4));
  CHECK(is_prime(97));
  CHECK_FALSE(is_prime(91));  // 7 * 13
  CHECK(is_prime(7919));
  CHECK_FALSE(is_prime(-7));
}

TEST_CASE("pow matches repeated multiplication") {
  Residue a(3, 11);
  Residue acc(1, 11);
  for (int e = 0; e <= 20; ++e) {
    CHECK(a.pow(e) == acc);
    acc = acc * a;
  }
  CHECK_THROWS_AS(a.pow(-1), domain_error);
}
