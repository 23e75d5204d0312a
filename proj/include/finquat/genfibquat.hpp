#pragma once

#include <cstdint>
#include <string>

#include "finquat/fibseq.hpp"
#include "finquat/quatring.hpp"

namespace finquat {

/** Integer coefficients of the blended sequence g_n = p f_{n-1} + q l_n. */
struct GflParams {
  std::int64_t p_coef;
  std::int64_t q_coef;

  bool operator==(const GflParams&) const noexcept = default;
};

/// g_n mod m for n >= 0 (uses f_{-1} = 1 at n = 0). Coefficients may be
/// negative; they are reduced into Z_m first.
Residue gfl_number(const GflParams& params, std::int64_t n, std::int64_t m);

/// G_n = g_n + g_{n+1} i + g_{n+2} j + g_{n+3} k in the (-1, -1) algebra over Z_r.
Quaternion gfl_quaternion(const GflParams& params, std::int64_t n, std::int64_t r);

/// Closed form of n(G_n) mod r:
/// 3 p^2 f_{2n+1} + 15 q^2 f_{2n+3} + 6 p q (f_{2n+1} + f_{2n+3}).
Residue gfl_norm(const GflParams& params, std::int64_t n, std::int64_t r);

/// Verdict for G_n over Z_r by the norm criterion. Unlike Fibonacci
/// quaternions, G_n can be the zero element (for instance when both
/// coefficients vanish mod r); that reports Verdict::Zero, which counts as
/// non-invertible but not as a zero divisor. Whenever a residue rule covers
/// (params, r), the verdict is cross-checked against it.
Classification classify_gfl(const GflParams& params, std::int64_t n, std::int64_t r);

/// Shape of the zero-divisor index set for fixed (params, r).
enum class GflConditionKind {
  residue_class,      // n = residue (mod modulus)
  all_indices,        // every n >= 0
  entry_point_class,  // n = residue (mod z(r')); index_for(l) enumerates it
  no_solutions,       // entry point even: the congruence has no solutions
  no_closed_form,     // no rule covers this input; evaluate norms per index
};

struct GflCondition {
  GflConditionKind kind;
  std::int64_t modulus;   // class modulus (3, 5, or the entry point); 0 otherwise
  std::int64_t residue;   // meaningful for residue_class / entry_point_class
  std::int64_t formula_offset;  // entry_point_class: n = ((2l+1) modulus - offset) / 2
  std::string rule;       // which classification rule produced this condition

  /// Does the condition predict n(G_n) = 0 at this index?
  /// Unusable for no_closed_form (throws domain_error).
  bool predicts_zero_norm(std::int64_t n) const;

  /// l-th solution of an entry_point_class condition, l >= 0.
  std::int64_t index_for(std::int64_t l) const;
};

/**
 * Zero-divisor condition for (params, r).
 *
 * r = 2: four parity cases on (p, q): (even, odd) -> n = 0 mod 3,
 * (odd, even) -> n = 1 mod 3, (even, even) -> all, (odd, odd) -> n = 2 mod 3.
 * r = 3: all indices. r = 5: six cases on (p mod 5, q mod 5), checked in
 * order: p = 0 -> all; p = q -> n = 4; p + q = 0 -> n = 0;
 * (p,q) in {(1,2),(3,1),(2,4),(4,3)} -> n = 1;
 * (p,q) in {(2,1),(3,4),(4,2),(1,3)} -> n = 3; q = 0 -> n = 2 (all mod 5).
 * r = p_coef (distinct primes p_coef > 5, q_coef): n solves 2n + 3 = 0 mod
 * z(p_coef). r = q_coef (distinct primes q_coef > 5, p_coef): n solves
 * 2n + 1 = 0 mod z(q_coef). Both need an odd entry point; an even one gives
 * no_solutions. Any other r raises unsupported_case_error.
 */
GflCondition gfl_zero_divisor_condition(const GflParams& params, std::int64_t r);

}  // namespace finquat
