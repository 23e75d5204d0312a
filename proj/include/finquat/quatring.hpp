#pragma once

#include <array>
#include <cstdint>
#include <string_view>

#include "finquat/modarith.hpp"

namespace finquat {

/**
 * The generalized quaternion algebra over Z_m with parameters (alpha, beta):
 * basis {1, i, j, k}, relations i^2 = alpha, j^2 = beta, ij = k = -ji.
 * The remaining products follow: ik = alpha j, ki = -alpha j, jk = -beta i,
 * kj = beta i, k^2 = -alpha beta.
 */
class QuatAlgebra {
 public:
  QuatAlgebra(std::int64_t modulus, std::int64_t alpha, std::int64_t beta);

  std::int64_t modulus() const noexcept { return alpha_.modulus(); }
  const Residue& alpha() const noexcept { return alpha_; }
  const Residue& beta() const noexcept { return beta_; }

  bool operator==(const QuatAlgebra&) const noexcept = default;

 private:
  Residue alpha_;
  Residue beta_;
};

/**
 * Quaternion x1 + x2 i + x3 j + x4 k with coordinates in Z_m. Value type;
 * binary operations require the two operands to live in the same algebra.
 */
class Quaternion {
 public:
  Quaternion(const QuatAlgebra& algebra, std::int64_t x1, std::int64_t x2, std::int64_t x3,
             std::int64_t x4);

  static Quaternion zero(const QuatAlgebra& algebra) { return {algebra, 0, 0, 0, 0}; }
  static Quaternion one(const QuatAlgebra& algebra) { return {algebra, 1, 0, 0, 0}; }

  const QuatAlgebra& algebra() const noexcept { return algebra_; }
  const Residue& x1() const noexcept { return c_[0]; }
  const Residue& x2() const noexcept { return c_[1]; }
  const Residue& x3() const noexcept { return c_[2]; }
  const Residue& x4() const noexcept { return c_[3]; }
  std::array<std::int64_t, 4> coords() const noexcept;
  bool is_zero() const noexcept;

  friend Quaternion operator+(const Quaternion& x, const Quaternion& y);
  friend Quaternion operator-(const Quaternion& x, const Quaternion& y);
  friend Quaternion operator*(const Quaternion& x, const Quaternion& y);

  bool operator==(const Quaternion&) const noexcept = default;

 private:
  QuatAlgebra algebra_;
  std::array<Residue, 4> c_;
};

/// x1 - x2 i - x3 j - x4 k. Involution; x * conj(x) = norm(x) * 1.
Quaternion conjugate(const Quaternion& x);

/// n(x) = x1^2 - alpha x2^2 - beta x3^2 + alpha beta x4^2. Multiplicative.
Residue norm(const Quaternion& x);

enum class Verdict { Zero, Unit, ZeroDivisor };

std::string_view to_string(Verdict v) noexcept;

struct Classification {
  Verdict verdict;
  Residue norm_value;
};

/// Over a prime modulus every element is 0, a unit (norm != 0) or a zero
/// divisor (nonzero, norm = 0). Composite moduli are rejected.
Classification classify(const Quaternion& x);

/// Two-sided inverse conj(x) / n(x) of a unit; non-units are a domain error.
Quaternion inverse(const Quaternion& x);

/** 2x2 matrix over Z_m, row-major. Just enough arithmetic for the split isomorphism. */
struct Mat2 {
  std::array<Residue, 4> e;  // [ e[0] e[1] ; e[2] e[3] ]

  static Mat2 identity(std::int64_t m);
  static Mat2 zero(std::int64_t m);

  friend Mat2 operator+(const Mat2& a, const Mat2& b);
  friend Mat2 operator*(const Mat2& a, const Mat2& b);
  Residue det() const;

  bool operator==(const Mat2&) const noexcept = default;
};

/// Split isomorphism onto M_2(Z_p) for odd prime p and (alpha, beta) = (-1, -1):
/// 1 -> I, i -> [[a, b], [b, -a]] with a^2 + b^2 = -1, j -> [[0, -1], [1, 0]],
/// k -> phi(i) phi(j). Satisfies det(phi(x)) = n(x). p = 2 is refused: the
/// algebra is commutative there and has no such matrix model.
Mat2 matrix_rep(const Quaternion& x);

enum class CensusMode { formula, brute_force };

/// Number of non-invertible elements (zero divisors plus 0) of the algebra
/// (-1, -1) over Z_p. Formula mode evaluates p^3 + p^2 - p, valid for odd p;
/// brute-force mode classifies all p^4 elements and is capped at p <= 23.
std::int64_t zero_divisor_census(std::int64_t p, CensusMode mode);

}  // namespace finquat
