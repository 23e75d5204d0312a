#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "finquat/fibseq.hpp"
#include "finquat/quatring.hpp"

namespace finquat {

/// F_n = f_n + f_{n+1} i + f_{n+2} j + f_{n+3} k in the (-1, -1) algebra over Z_p.
Quaternion fib_quaternion(std::int64_t n, std::int64_t p);

/// n(F_n) = 3 f_{2n+3} mod p, the closed form of the coordinate-wise norm.
Residue fib_quat_norm(std::int64_t n, std::int64_t p);

/**
 * Classification of F_n over Z_p together with the two norm routes.
 * Always cross-checked: norm(element) must equal 3 f_{2n+3}, and the verdict
 * must match the residue-class rule for p (n = 0 mod 3 at p = 2, every n at
 * p = 3, n = 1 mod 5 at p = 5, the entry-point classes for p > 5). Any
 * disagreement raises invariant_violation.
 */
struct FibQuatReport {
  std::int64_t index;
  Quaternion element;
  Residue norm_via_identity;
  Classification classification;
  std::int64_t period_position;  // index mod k(p)
};

FibQuatReport classify_fib(std::int64_t n, std::int64_t p);

/**
 * Which indices give zero-divisor F_n for p > 5. Solutions exist exactly when
 * z(p) is odd: then n is a zero divisor iff 2n + 3 = 0 (mod z), a single
 * residue class mod z, enumerated by n(l) = ((2l + 1) z - 3) / 2 for l >= 0.
 * Even z(p) leaves the class empty (has_solutions = false).
 */
struct IndexClasses {
  std::int64_t prime;
  std::int64_t entry_point;
  bool has_solutions;
  std::int64_t residue_class;  // meaningful only when has_solutions

  std::int64_t index_for(std::int64_t l) const;  // l >= 0, requires has_solutions
};

IndexClasses zero_divisor_index_classes(std::int64_t p);

/// The l-indexed zero-divisor family for p = 13 or 17 (mod 20):
/// n = (p (2l + 1) + 2l - 1) / 4 - 1 for l >= 1. Asserts the division is exact
/// and that F_n really classifies as a zero divisor before returning n.
std::int64_t theorem21_index(std::int64_t p, std::int64_t l);

/// Name of the residue-class rule that decides F_n over Z_p, for reporting.
std::string closed_form_rule(std::int64_t n, std::int64_t p);

/** Every F_n across one Pisano period, with distinct-element tallies. */
struct PeriodEnumeration {
  std::int64_t prime;
  PeriodInfo period;
  std::vector<FibQuatReport> reports;  // n = 0 .. k(p) - 1
  std::int64_t distinct_zero_divisors;
  std::int64_t distinct_units;
};

PeriodEnumeration enumerate_period(std::int64_t p,
                                   std::int64_t max_period = limits::default_max_horizon);

}  // namespace finquat
