#pragma once

#include <cstdint>
#include <mutex>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "finquat/modarith.hpp"

namespace finquat {

/** Adjacent Fibonacci values (f_n, f_{n+1}) mod a common modulus. */
struct FibPair {
  std::int64_t index;
  Residue f_n;
  Residue f_n_plus_1;
};

/// How the Pisano period k relates to the entry point z for a prime modulus:
/// k = z when z = 2 (mod 4), k = 2z when z = 0 (mod 4), k = 4z when z is odd.
/// p = 2 (z = k = 3) carries the k = z tag. Composite moduli have a Pisano
/// period but no entry point here, hence the unclassified tag.
enum class PeriodRelation { k_equals_z, k_equals_2z, k_equals_4z, composite_unclassified };

std::string_view to_string(PeriodRelation r) noexcept;

struct PeriodInfo {
  std::int64_t modulus;
  std::int64_t entry_point;    // z: least z >= 1 with modulus | f_z
  std::int64_t pisano_period;  // k: least k >= 1 with (f_k, f_{k+1}) = (0, 1)
  PeriodRelation relation;

  bool operator==(const PeriodInfo&) const noexcept = default;
};

/// f_n mod m by fast doubling, O(log n). The index -1 is accepted (f_{-1} = 1);
/// anything below that is a domain error.
Residue fib_mod(std::int64_t n, std::int64_t m);

/// (f_n, f_{n+1}) mod m for n >= 0. One doubling pass, shared by fib and lucas.
FibPair fib_pair_mod(std::int64_t n, std::int64_t m);

/// Lucas number l_n mod m for n >= 0, from l_n = 2 f_{n+1} - f_n.
Residue lucas_mod(std::int64_t n, std::int64_t m);

/// Pisano period k(m) by iterating the pair map until (0, 1) recurs.
/// Moduli above the guardrail raise resource_limit_error.
std::int64_t pisano_period(std::int64_t m,
                           std::int64_t max_modulus = limits::max_pisano_modulus);

/// Entry point z(p) for prime p: least z >= 1 with p | f_z. Scans at most one
/// Pisano period and self-checks the divisibility z | k.
std::int64_t entry_point(std::int64_t p);

/// z, k and their relation for a prime modulus. Self-checks the observed k/z
/// ratio against the z mod 4 rule and refuses composite input.
PeriodInfo period_info(std::int64_t p);

/// One full cycle f_0 .. f_{k(m)-1} mod m.
std::vector<Residue> fib_cycle(std::int64_t m,
                               std::int64_t max_modulus = limits::max_pisano_modulus);

/**
 * Both sides of the half-period congruence for f_{(p - (p/5))/2} mod p:
 * 0 when p = 1 (mod 4), and 2(-1)^floor((p+5)/10) * (p/5) * 5^((p-3)/4)
 * when p = 3 (mod 4). Defined for primes other than 2 and 5.
 */
struct SunCongruence {
  std::int64_t prime;
  Residue lhs;
  Residue rhs;
  bool holds;
};

SunCongruence sun_congruence_check(std::int64_t p);

/**
 * Transparent memo for period_info. Results are identical with or without it,
 * and lookups are safe from concurrent threads.
 */
class PeriodInfoCache {
 public:
  PeriodInfo info(std::int64_t p);

 private:
  std::mutex mutex_;
  std::unordered_map<std::int64_t, PeriodInfo> cache_;
};

}  // namespace finquat
