#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace finquat {

/** Rejected input: bad modulus, mismatched rings, unmet precondition. CLI exit code 2. */
class domain_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/** Inversion of a residue that shares a factor with the modulus; carries the gcd witness. */
class not_invertible_error : public domain_error {
 public:
  not_invertible_error(std::int64_t value, std::int64_t modulus, std::int64_t gcd)
      : domain_error("residue " + std::to_string(value) + " is not invertible mod " +
                     std::to_string(modulus) + " (gcd = " + std::to_string(gcd) + ")"),
        gcd_(gcd) {}

  std::int64_t gcd() const noexcept { return gcd_; }

 private:
  std::int64_t gcd_;
};

/** Requested work exceeds a configured enumeration bound. CLI exit code 3. */
class resource_limit_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/** A rule asked for input it has no case for; callers may fall back to direct evaluation. */
class unsupported_case_error : public domain_error {
 public:
  using domain_error::domain_error;
};

/** Two routes that must agree (closed form vs direct computation) disagreed. */
class invariant_violation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

namespace limits {
inline constexpr std::int64_t max_pisano_modulus = 1'000'000;
inline constexpr std::int64_t max_census_prime = 23;
inline constexpr std::int64_t default_max_brute_prime = 11;
inline constexpr std::int64_t default_max_horizon = 10'000;
}  // namespace limits

}  // namespace finquat
