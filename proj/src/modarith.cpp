#include "finquat/modarith.hpp"

#include <numeric>
#include <string>

namespace finquat {

namespace {

std::int64_t floor_mod(std::int64_t n, std::int64_t m) {
  std::int64_t r = n % m;
  return r < 0 ? r + m : r;
}

std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t m) {
  return static_cast<std::int64_t>(
      static_cast<unsigned __int128>(a) * static_cast<unsigned __int128>(b) %
      static_cast<unsigned __int128>(m));
}

void require_same_modulus(const Residue& a, const Residue& b) {
  if (a.modulus() != b.modulus()) {
    throw domain_error("modulus mismatch: " + std::to_string(a.modulus()) + " vs " +
                       std::to_string(b.modulus()));
  }
}

}  // namespace

Residue::Residue(std::int64_t n, std::int64_t modulus) : modulus_(modulus) {
  if (modulus < 2) {
    throw domain_error("modulus must be >= 2, got " + std::to_string(modulus));
  }
  value_ = floor_mod(n, modulus);
}

Residue operator+(const Residue& a, const Residue& b) {
  require_same_modulus(a, b);
  std::int64_t s = a.value_ - (a.modulus_ - b.value_);
  return Residue(s < 0 ? s + a.modulus_ : s, a.modulus_);
}

Residue operator-(const Residue& a, const Residue& b) {
  require_same_modulus(a, b);
  std::int64_t d = a.value_ - b.value_;
  return Residue(d < 0 ? d + a.modulus_ : d, a.modulus_);
}

Residue operator*(const Residue& a, const Residue& b) {
  require_same_modulus(a, b);
  return Residue(mul_mod(a.value_, b.value_, a.modulus_), a.modulus_);
}

Residue Residue::operator-() const {
  return Residue(value_ == 0 ? 0 : modulus_ - value_, modulus_);
}

Residue Residue::pow(std::int64_t e) const {
  if (e < 0) {
    throw domain_error("pow expects a nonnegative exponent, got " + std::to_string(e));
  }
  std::int64_t base = value_, acc = 1 % modulus_;
  while (e > 0) {
    if (e & 1) acc = mul_mod(acc, base, modulus_);
    base = mul_mod(base, base, modulus_);
    e >>= 1;
  }
  return Residue(acc, modulus_);
}

Residue inverse(const Residue& a) {
  // Extended Euclid on (a, m); works for composite moduli as well.
  std::int64_t r0 = a.modulus(), r1 = a.value();
  std::int64_t t0 = 0, t1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    r0 -= q * r1;
    std::swap(r0, r1);
    t0 -= q * t1;
    std::swap(t0, t1);
  }
  if (r0 != 1) {
    throw not_invertible_error(a.value(), a.modulus(), r0);
  }
  return Residue(t0, a.modulus());
}

bool is_prime(std::int64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

void require_prime(std::int64_t p, const char* where) {
  if (!is_prime(p)) {
    throw domain_error(std::string(where) + ": " + std::to_string(p) + " is not prime");
  }
}

void require_odd_prime(std::int64_t p, const char* where) {
  require_prime(p, where);
  if (p == 2) {
    throw domain_error(std::string(where) + ": p = 2 is not supported");
  }
}

int legendre(std::int64_t a, std::int64_t p) {
  require_odd_prime(p, "legendre");
  Residue base(a, p);
  if (base.is_zero()) return 0;
  Residue r = base.pow((p - 1) / 2);
  return r.value() == 1 ? 1 : -1;
}

std::pair<Residue, Residue> two_square_root_of_minus_one(std::int64_t p) {
  require_odd_prime(p, "two_square_root_of_minus_one");
  for (std::int64_t a = 0; a < p; ++a) {
    std::int64_t want = floor_mod(-1 - a * a, p);
    for (std::int64_t b = a; b < p; ++b) {
      if (b * b % p == want) {
        return {Residue(a, p), Residue(b, p)};
      }
    }
  }
  // -1 is always a sum of two squares mod an odd prime.
  throw invariant_violation("no (a, b) with a^2 + b^2 = -1 mod " + std::to_string(p));
}

}  // namespace finquat
