#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "finquat/genfibquat.hpp"

namespace finquat::oracle {

/**
 * One input where a recomputed value differs from a claimed one. Differences
 * listed in the known-errata manifest are tagged and do not fail a check;
 * anything untagged does.
 */
struct Discrepancy {
  std::string input;
  std::string expected_by_paper;
  std::string computed;
  bool known_erratum = false;
};

struct VerificationReport {
  std::string check_name;
  std::string scope;
  bool passed = false;
  std::vector<Discrepancy> discrepancies;
};

/// Mark passed from the collected discrepancies (all tagged => passed).
VerificationReport finish(VerificationReport report);

/// Sort a merged report set by check_name so concurrent producers cannot
/// change the output.
void sort_reports(std::vector<VerificationReport>& reports);

// Independent recomputation helpers. These deliberately avoid the fast
// doubling, closed-form and quaternion code paths they are used to check:
// plain iterated addition and the sum-of-squares norm only.

/// Exact f_n (n in [-1, 92]) and l_n (n in [0, 90]); larger indices overflow
/// 64-bit and are a domain error.
std::int64_t fib_exact(std::int64_t n);
std::int64_t lucas_exact(std::int64_t n);

/// First `count` values of f mod m / l mod m by naive iteration.
std::vector<std::int64_t> fib_sequence_mod(std::int64_t m, std::int64_t count);
std::vector<std::int64_t> lucas_sequence_mod(std::int64_t m, std::int64_t count);

/// Definitional norm in the (-1, -1) algebra: sum of four squares mod m.
std::int64_t sum_of_squares_mod(std::int64_t a, std::int64_t b, std::int64_t c,
                                std::int64_t d, std::int64_t m);

/// Non-invertible count over Z_p (p <= 23): every claim route vs exhaustive
/// enumeration. p = 2 carries the known erratum (claimed 10, counted 8).
VerificationReport verify_census(std::int64_t p);

/// F_n for n < horizon: naive verdicts vs classify_fib and vs the residue
/// rules; per-period zero-divisor position and distinct-element counts.
/// The unconditional per-period count of 4 is erratum-tagged when z(p) is even.
VerificationReport verify_fib_classifications(std::int64_t p, std::int64_t horizon);

struct GflGrid {
  std::vector<GflParams> params;
  std::vector<std::int64_t> moduli;  // prime r values
  std::int64_t horizon = 60;
};

/// Norm formula and residue rules for every (params, r) pair of the grid
/// against naive evaluation of the g-sequence.
VerificationReport verify_gfl(const GflGrid& grid);

/// Sequence-layer identities, one report per identity: fast doubling vs
/// naive iteration, Fibonacci divisibility, the five index identities, the
/// entry-point divisibility and period-relation rules, the half-period
/// congruence, and the frozen cycles mod 2, 3, 5.
std::vector<VerificationReport> verify_sequence_layer();

}  // namespace finquat::oracle
