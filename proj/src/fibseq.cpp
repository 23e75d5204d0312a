#include "finquat/fibseq.hpp"

#include <bit>
#include <string>

namespace finquat {

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

// (f_n, f_{n+1}) mod m, n >= 0, by fast doubling from the top bit down:
//   f_{2k}   = f_k (2 f_{k+1} - f_k)
//   f_{2k+1} = f_k^2 + f_{k+1}^2
std::pair<std::uint64_t, std::uint64_t> doubling_pair(std::uint64_t n, std::uint64_t m) {
  std::uint64_t a = 0, b = 1 % m;  // (f_0, f_1)
  if (n == 0) return {a, b};
  int bits = std::bit_width(n);
  for (int i = bits - 1; i >= 0; --i) {
    std::uint64_t two_b = (2 * b) % m;
    std::uint64_t c = mul_mod(a, (two_b + m - a) % m, m);      // f_{2k}
    std::uint64_t d = (mul_mod(a, a, m) + mul_mod(b, b, m)) % m;  // f_{2k+1}
    if ((n >> i) & 1) {
      a = d;
      b = (c + d) % m;
    } else {
      a = c;
      b = d;
    }
  }
  return {a, b};
}

void check_modulus_bound(std::int64_t m, std::int64_t max_modulus, const char* where) {
  if (m > max_modulus) {
    throw resource_limit_error(std::string(where) + ": modulus " + std::to_string(m) +
                               " exceeds guardrail " + std::to_string(max_modulus));
  }
}

}  // namespace

std::string_view to_string(PeriodRelation r) noexcept {
  switch (r) {
    case PeriodRelation::k_equals_z: return "k=z";
    case PeriodRelation::k_equals_2z: return "k=2z";
    case PeriodRelation::k_equals_4z: return "k=4z";
    case PeriodRelation::composite_unclassified: return "composite-modulus-unclassified";
  }
  return "?";
}

Residue fib_mod(std::int64_t n, std::int64_t m) {
  if (m < 2) throw domain_error("fib_mod: modulus must be >= 2");
  if (n == -1) return Residue(1, m);
  if (n < -1) {
    throw domain_error("fib_mod: index " + std::to_string(n) +
                       " is below -1, the only negative index supported");
  }
  auto [a, b] = doubling_pair(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(m));
  (void)b;
  return Residue(static_cast<std::int64_t>(a), m);
}

FibPair fib_pair_mod(std::int64_t n, std::int64_t m) {
  if (m < 2) throw domain_error("fib_pair_mod: modulus must be >= 2");
  if (n < 0) throw domain_error("fib_pair_mod: index must be >= 0");
  auto [a, b] = doubling_pair(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(m));
  return FibPair{n, Residue(static_cast<std::int64_t>(a), m),
                 Residue(static_cast<std::int64_t>(b), m)};
}

Residue lucas_mod(std::int64_t n, std::int64_t m) {
  if (n < 0) throw domain_error("lucas_mod: index must be >= 0");
  FibPair fp = fib_pair_mod(n, m);
  return fp.f_n_plus_1 + fp.f_n_plus_1 - fp.f_n;
}

std::int64_t pisano_period(std::int64_t m, std::int64_t max_modulus) {
  if (m < 2) throw domain_error("pisano_period: modulus must be >= 2");
  check_modulus_bound(m, max_modulus, "pisano_period");
  std::int64_t a = 0, b = 1 % m, k = 0;
  do {
    std::int64_t next = (a + b) % m;
    a = b;
    b = next;
    ++k;
  } while (!(a == 0 && b == 1 % m));
  return k;
}

std::int64_t entry_point(std::int64_t p) {
  require_prime(p, "entry_point");
  std::int64_t k = pisano_period(p);
  std::int64_t a = 0, b = 1 % p;
  for (std::int64_t z = 1; z <= k; ++z) {
    std::int64_t next = (a + b) % p;
    a = b;
    b = next;
    if (a == 0) {
      if (k % z != 0) {
        throw invariant_violation("entry point " + std::to_string(z) +
                                  " does not divide Pisano period " + std::to_string(k) +
                                  " for p = " + std::to_string(p));
      }
      return z;
    }
  }
  throw invariant_violation("no zero of the Fibonacci sequence within one period mod " +
                            std::to_string(p));
}

PeriodInfo period_info(std::int64_t p) {
  std::int64_t z = entry_point(p);  // rejects composite p
  std::int64_t k = pisano_period(p);
  PeriodRelation rel;
  if (p == 2) {
    rel = PeriodRelation::k_equals_z;  // z = k = 3; the mod 4 rule starts at odd primes
  } else if (z % 4 == 2) {
    rel = PeriodRelation::k_equals_z;
  } else if (z % 4 == 0) {
    rel = PeriodRelation::k_equals_2z;
  } else {
    rel = PeriodRelation::k_equals_4z;
  }
  std::int64_t expected = rel == PeriodRelation::k_equals_z    ? z
                          : rel == PeriodRelation::k_equals_2z ? 2 * z
                                                               : 4 * z;
  if (k != expected) {
    throw invariant_violation("period relation mismatch for p = " + std::to_string(p) +
                              ": z = " + std::to_string(z) + ", k = " + std::to_string(k));
  }
  return PeriodInfo{p, z, k, rel};
}

std::vector<Residue> fib_cycle(std::int64_t m, std::int64_t max_modulus) {
  std::int64_t k = pisano_period(m, max_modulus);
  std::vector<Residue> cycle;
  cycle.reserve(static_cast<std::size_t>(k));
  std::int64_t a = 0, b = 1 % m;
  for (std::int64_t i = 0; i < k; ++i) {
    cycle.emplace_back(a, m);
    std::int64_t next = (a + b) % m;
    a = b;
    b = next;
  }
  return cycle;
}

SunCongruence sun_congruence_check(std::int64_t p) {
  require_prime(p, "sun_congruence_check");
  if (p == 2 || p == 5) {
    throw domain_error("sun_congruence_check: p = " + std::to_string(p) +
                       " is outside the statement (p != 2, 5)");
  }
  int chi = legendre(p, 5);  // (p/5)
  Residue lhs = fib_mod((p - chi) / 2, p);
  Residue rhs(0, p);
  if (p % 4 == 3) {
    Residue value = Residue(2, p) * Residue(5, p).pow((p - 3) / 4);
    bool negate = ((p + 5) / 10) % 2 == 1;
    if (chi == -1) negate = !negate;
    rhs = negate ? -value : value;
  }
  return SunCongruence{p, lhs, rhs, lhs == rhs};
}

PeriodInfo PeriodInfoCache::info(std::int64_t p) {
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = cache_.find(p);
    if (it != cache_.end()) return it->second;
  }
  PeriodInfo computed = period_info(p);  // outside the lock; recomputation is harmless
  std::lock_guard<std::mutex> lock(mutex_);
  return cache_.try_emplace(p, computed).first->second;
}

}  // namespace finquat
