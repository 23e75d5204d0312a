#include "finquat/quatring.hpp"

#include <string>

namespace finquat {

namespace {

void require_same_algebra(const Quaternion& x, const Quaternion& y, const char* op) {
  if (!(x.algebra() == y.algebra())) {
    throw domain_error(std::string(op) + ": operands live in different algebras");
  }
}

}  // namespace

QuatAlgebra::QuatAlgebra(std::int64_t modulus, std::int64_t alpha, std::int64_t beta)
    : alpha_(alpha, modulus), beta_(beta, modulus) {}

Quaternion::Quaternion(const QuatAlgebra& algebra, std::int64_t x1, std::int64_t x2,
                       std::int64_t x3, std::int64_t x4)
    : algebra_(algebra),
      c_{Residue(x1, algebra.modulus()), Residue(x2, algebra.modulus()),
         Residue(x3, algebra.modulus()), Residue(x4, algebra.modulus())} {}

std::array<std::int64_t, 4> Quaternion::coords() const noexcept {
  return {c_[0].value(), c_[1].value(), c_[2].value(), c_[3].value()};
}

bool Quaternion::is_zero() const noexcept {
  return c_[0].is_zero() && c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero();
}

Quaternion operator+(const Quaternion& x, const Quaternion& y) {
  require_same_algebra(x, y, "quaternion addition");
  return Quaternion(x.algebra_, (x.c_[0] + y.c_[0]).value(), (x.c_[1] + y.c_[1]).value(),
                    (x.c_[2] + y.c_[2]).value(), (x.c_[3] + y.c_[3]).value());
}

Quaternion operator-(const Quaternion& x, const Quaternion& y) {
  require_same_algebra(x, y, "quaternion subtraction");
  return Quaternion(x.algebra_, (x.c_[0] - y.c_[0]).value(), (x.c_[1] - y.c_[1]).value(),
                    (x.c_[2] - y.c_[2]).value(), (x.c_[3] - y.c_[3]).value());
}

Quaternion operator*(const Quaternion& x, const Quaternion& y) {
  require_same_algebra(x, y, "quaternion multiplication");
  const Residue& a = x.algebra_.alpha();
  const Residue& b = x.algebra_.beta();
  const auto& u = x.c_;
  const auto& v = y.c_;
  // Bilinear expansion of the defining relations.
  Residue z1 = u[0] * v[0] + a * (u[1] * v[1]) + b * (u[2] * v[2]) - a * b * (u[3] * v[3]);
  Residue z2 = u[0] * v[1] + u[1] * v[0] - b * (u[2] * v[3]) + b * (u[3] * v[2]);
  Residue z3 = u[0] * v[2] + u[2] * v[0] + a * (u[1] * v[3]) - a * (u[3] * v[1]);
  Residue z4 = u[0] * v[3] + u[3] * v[0] + u[1] * v[2] - u[2] * v[1];
  return Quaternion(x.algebra_, z1.value(), z2.value(), z3.value(), z4.value());
}

Quaternion conjugate(const Quaternion& x) {
  return Quaternion(x.algebra(), x.x1().value(), (-x.x2()).value(), (-x.x3()).value(),
                    (-x.x4()).value());
}

Residue norm(const Quaternion& x) {
  const Residue& a = x.algebra().alpha();
  const Residue& b = x.algebra().beta();
  return x.x1() * x.x1() - a * (x.x2() * x.x2()) - b * (x.x3() * x.x3()) +
         a * b * (x.x4() * x.x4());
}

std::string_view to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::Zero: return "Zero";
    case Verdict::Unit: return "Unit";
    case Verdict::ZeroDivisor: return "ZeroDivisor";
  }
  return "?";
}

Classification classify(const Quaternion& x) {
  require_prime(x.algebra().modulus(), "classify");
  Residue n = norm(x);
  if (x.is_zero()) return {Verdict::Zero, n};
  return {n.is_zero() ? Verdict::ZeroDivisor : Verdict::Unit, n};
}

Quaternion inverse(const Quaternion& x) {
  Classification c = classify(x);
  if (c.verdict != Verdict::Unit) {
    throw domain_error("inverse: element is not a unit (verdict " +
                       std::string(to_string(c.verdict)) + ")");
  }
  Residue s = inverse(c.norm_value);
  Quaternion xbar = conjugate(x);
  return Quaternion(x.algebra(), (xbar.x1() * s).value(), (xbar.x2() * s).value(),
                    (xbar.x3() * s).value(), (xbar.x4() * s).value());
}

Mat2 Mat2::identity(std::int64_t m) {
  return Mat2{{Residue(1, m), Residue(0, m), Residue(0, m), Residue(1, m)}};
}

Mat2 Mat2::zero(std::int64_t m) {
  return Mat2{{Residue(0, m), Residue(0, m), Residue(0, m), Residue(0, m)}};
}

Mat2 operator+(const Mat2& a, const Mat2& b) {
  return Mat2{{a.e[0] + b.e[0], a.e[1] + b.e[1], a.e[2] + b.e[2], a.e[3] + b.e[3]}};
}

Mat2 operator*(const Mat2& a, const Mat2& b) {
  return Mat2{{a.e[0] * b.e[0] + a.e[1] * b.e[2], a.e[0] * b.e[1] + a.e[1] * b.e[3],
               a.e[2] * b.e[0] + a.e[3] * b.e[2], a.e[2] * b.e[1] + a.e[3] * b.e[3]}};
}

Residue Mat2::det() const { return e[0] * e[3] - e[1] * e[2]; }

Mat2 matrix_rep(const Quaternion& x) {
  std::int64_t p = x.algebra().modulus();
  require_odd_prime(p, "matrix_rep");
  Residue minus_one = -Residue(1, p);
  if (!(x.algebra().alpha() == minus_one) || !(x.algebra().beta() == minus_one)) {
    throw domain_error("matrix_rep: defined only for the (-1, -1) algebra");
  }
  auto [a, b] = two_square_root_of_minus_one(p);
  const Residue &x1 = x.x1(), &x2 = x.x2(), &x3 = x.x3(), &x4 = x.x4();
  // x1 I + x2 [[a, b], [b, -a]] + x3 [[0, -1], [1, 0]] + x4 [[b, -a], [-a, -b]]
  return Mat2{{x1 + a * x2 + b * x4, b * x2 - x3 - a * x4, b * x2 + x3 - a * x4,
               x1 - a * x2 - b * x4}};
}

std::int64_t zero_divisor_census(std::int64_t p, CensusMode mode) {
  require_prime(p, "zero_divisor_census");
  if (mode == CensusMode::formula) {
    if (p == 2) {
      throw domain_error(
          "zero_divisor_census: the count p^3 + p^2 - p holds for odd p only; "
          "enumerate p = 2 in brute-force mode instead");
    }
    return p * p * p + p * p - p;
  }
  if (p > limits::max_census_prime) {
    throw resource_limit_error("zero_divisor_census: p = " + std::to_string(p) +
                               " exceeds the p^4 enumeration cap " +
                               std::to_string(limits::max_census_prime));
  }
  QuatAlgebra alg(p, -1, -1);
  std::int64_t count = 0;
  for (std::int64_t x1 = 0; x1 < p; ++x1)
    for (std::int64_t x2 = 0; x2 < p; ++x2)
      for (std::int64_t x3 = 0; x3 < p; ++x3)
        for (std::int64_t x4 = 0; x4 < p; ++x4) {
          Classification c = classify(Quaternion(alg, x1, x2, x3, x4));
          if (c.verdict != Verdict::Unit) ++count;
        }
  return count;
}

}  // namespace finquat
