#pragma once

#include <cstdint>
#include <utility>

#include "finquat/errors.hpp"

namespace finquat {

/**
 * Element of Z_m held as its canonical representative.
 *
 * Invariants: modulus >= 2 and 0 <= value < modulus. Arithmetic never
 * overflows for any modulus below 2^63 (products go through 128-bit
 * intermediates). Mixed-modulus operands are a domain error, never a
 * silent coercion.
 */
class Residue {
 public:
  Residue(std::int64_t n, std::int64_t modulus);

  std::int64_t value() const noexcept { return value_; }
  std::int64_t modulus() const noexcept { return modulus_; }
  bool is_zero() const noexcept { return value_ == 0; }

  friend Residue operator+(const Residue& a, const Residue& b);
  friend Residue operator-(const Residue& a, const Residue& b);
  friend Residue operator*(const Residue& a, const Residue& b);
  Residue operator-() const;

  /// a^e for e >= 0, by binary exponentiation.
  Residue pow(std::int64_t e) const;

  bool operator==(const Residue& other) const noexcept = default;

 private:
  std::int64_t value_;
  std::int64_t modulus_;
};

/// Multiplicative inverse via the extended Euclidean algorithm. Works for any
/// modulus, prime or not; throws not_invertible_error (with the gcd witness)
/// when gcd(a, m) > 1.
Residue inverse(const Residue& a);

/// Deterministic trial division; intended for the small moduli this library
/// accepts, not for cryptographic sizes.
bool is_prime(std::int64_t n) noexcept;

/// Throws domain_error unless p is prime (resp. an odd prime).
void require_prime(std::int64_t p, const char* where);
void require_odd_prime(std::int64_t p, const char* where);

/// Legendre symbol (a/p) in {-1, 0, +1} by Euler's criterion. p must be an
/// odd prime; primality is checked here rather than trusted.
int legendre(std::int64_t a, std::int64_t p);

/// Smallest pair (a, b) in lexicographic order with 0 <= a <= b < p and
/// a^2 + b^2 = -1 (mod p). Exists for every odd prime; p = 2 is rejected.
std::pair<Residue, Residue> two_square_root_of_minus_one(std::int64_t p);

}  // namespace finquat
