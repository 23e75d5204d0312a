#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <json.hpp>

#include "finquat/fibquat.hpp"
#include "finquat/genfibquat.hpp"
#include "finquat/oracle.hpp"

namespace finquat::cli {

/**
 * Enumeration bounds, overridable per invocation. Environment defaults:
 * FINQUAT_MAX_BRUTE_P caps brute-force census primes (default 11),
 * FINQUAT_MAX_HORIZON caps period/cycle enumerations (default 10000).
 */
struct Guardrails {
  std::int64_t max_brute_p = limits::default_max_brute_prime;
  std::int64_t max_horizon = limits::default_max_horizon;

  static Guardrails from_env();
};

/// "a + b·i + c·j + d·k" with zero terms elided and unit coefficients bare;
/// the zero element renders as "0".
std::string render_quaternion(const Quaternion& x);

/// {"coords": [x1, x2, x3, x4], "text": rendered form}
nlohmann::json quaternion_json(const Quaternion& x);

/// Common output shape of every command:
/// {"command": ..., "parameters": {...}, "result": ..., "warnings": [...]}.
/// Keys are emitted sorted, so serialization is byte-stable.
nlohmann::json envelope(std::string command, nlohmann::json parameters,
                        nlohmann::json result, std::vector<std::string> warnings = {});

nlohmann::json cmd_period(std::int64_t m);
nlohmann::json cmd_cycle(std::int64_t m, const Guardrails& guards);
nlohmann::json cmd_classify_fib(std::int64_t n, std::int64_t p);
nlohmann::json cmd_classify_gfl(std::int64_t p_coef, std::int64_t q_coef, std::int64_t n,
                                std::int64_t r);
nlohmann::json cmd_enumerate(std::int64_t p, const Guardrails& guards);

/// mode: "auto" (brute force when p is inside the guardrail, plus the formula
/// for odd p), "formula", or "brute-force".
nlohmann::json cmd_census(std::int64_t p, std::string_view mode, const Guardrails& guards);

nlohmann::json cmd_sun_check(std::int64_t p);

struct VerifyOutcome {
  nlohmann::json envelope;
  bool all_passed;
};

/// suite: census | fib | gfl | sequences | all. max_p filters the per-prime
/// check sets; brute-force census primes are additionally capped by the
/// guardrails.
VerifyOutcome cmd_verify(std::string_view suite, std::int64_t max_p,
                         const Guardrails& guards);

/// Human-readable rendering of an envelope (--format table).
std::string to_table(const nlohmann::json& envelope);

/// Full command-line entry point; returns the process exit code:
/// 0 success, 1 verification failure, 2 usage or domain error, 3 guardrail.
int run(int argc, const char* const* argv);

}  // namespace finquat::cli
