#include "finquat/fibquat.hpp"

#include <set>
#include <string>

namespace finquat {

namespace {

// Zero-divisor predicate from the residue-class rules, one branch per prime.
bool closed_form_predicts_zero_divisor(std::int64_t n, std::int64_t p) {
  if (p == 2) return n % 3 == 0;
  if (p == 3) return true;
  if (p == 5) return n % 5 == 1;
  IndexClasses idx = zero_divisor_index_classes(p);
  return idx.has_solutions && n % idx.entry_point == idx.residue_class;
}

}  // namespace

Quaternion fib_quaternion(std::int64_t n, std::int64_t p) {
  require_prime(p, "fib_quaternion");
  if (n < 0) throw domain_error("fib_quaternion: index must be >= 0");
  QuatAlgebra alg(p, -1, -1);
  FibPair fp = fib_pair_mod(n, p);
  Residue f2 = fp.f_n + fp.f_n_plus_1;
  Residue f3 = fp.f_n_plus_1 + f2;
  return Quaternion(alg, fp.f_n.value(), fp.f_n_plus_1.value(), f2.value(), f3.value());
}

Residue fib_quat_norm(std::int64_t n, std::int64_t p) {
  require_prime(p, "fib_quat_norm");
  if (n < 0) throw domain_error("fib_quat_norm: index must be >= 0");
  return Residue(3, p) * fib_mod(2 * n + 3, p);
}

FibQuatReport classify_fib(std::int64_t n, std::int64_t p) {
  Quaternion element = fib_quaternion(n, p);
  Residue via_identity = fib_quat_norm(n, p);
  Classification c = classify(element);
  if (!(c.norm_value == via_identity)) {
    throw invariant_violation("norm(F_" + std::to_string(n) + ") != 3 f_" +
                              std::to_string(2 * n + 3) + " mod " + std::to_string(p));
  }
  bool predicted = closed_form_predicts_zero_divisor(n, p);
  if (predicted != (c.verdict == Verdict::ZeroDivisor)) {
    throw invariant_violation("closed form and norm criterion disagree at n = " +
                              std::to_string(n) + ", p = " + std::to_string(p));
  }
  std::int64_t k = pisano_period(p);
  return FibQuatReport{n, element, via_identity, c, n % k};
}

std::int64_t IndexClasses::index_for(std::int64_t l) const {
  if (!has_solutions) {
    throw domain_error("index_for: no zero-divisor indices exist for p = " +
                       std::to_string(prime) + " (entry point is even)");
  }
  if (l < 0) throw domain_error("index_for: l must be >= 0");
  return ((2 * l + 1) * entry_point - 3) / 2;
}

IndexClasses zero_divisor_index_classes(std::int64_t p) {
  require_prime(p, "zero_divisor_index_classes");
  if (p <= 5) {
    throw domain_error("zero_divisor_index_classes: defined for p > 5; small primes "
                       "have their own residue rules");
  }
  std::int64_t z = entry_point(p);
  if (z % 2 == 0) return IndexClasses{p, z, false, 0};
  // 2n + 3 = 0 (mod z) has the single class n = (z - 3) / 2 (mod z).
  std::int64_t c = inverse(Residue(2, z)).value() * ((z - 3) % z + z) % z;
  return IndexClasses{p, z, true, c};
}

std::int64_t theorem21_index(std::int64_t p, std::int64_t l) {
  require_prime(p, "theorem21_index");
  if (p % 20 != 13 && p % 20 != 17) {
    throw domain_error("theorem21_index: p must be 13 or 17 (mod 20), got " +
                       std::to_string(p));
  }
  if (l < 1) throw domain_error("theorem21_index: l must be >= 1");
  __int128 numerator = static_cast<__int128>(p) * (2 * static_cast<__int128>(l) + 1) +
                       2 * static_cast<__int128>(l) - 1;
  if (numerator % 4 != 0) {
    throw invariant_violation("theorem21_index: 4 does not divide p(2l+1) + 2l - 1");
  }
  __int128 wide_n = numerator / 4 - 1;
  if (wide_n > (std::int64_t{1} << 62)) {
    throw resource_limit_error("theorem21_index: index overflows the supported range");
  }
  std::int64_t n = static_cast<std::int64_t>(wide_n);
  if (classify_fib(n, p).classification.verdict != Verdict::ZeroDivisor) {
    throw invariant_violation("theorem21_index: F_" + std::to_string(n) +
                              " is not a zero divisor mod " + std::to_string(p));
  }
  return n;
}

std::string closed_form_rule(std::int64_t n, std::int64_t p) {
  if (p == 2) return "Prop 2.1 i (zero divisor iff n = 0 mod 3)";
  if (p == 3) return "Prop 2.2 (every F_n is a zero divisor)";
  if (p == 5) return "Prop 2.3 i (zero divisor iff n = 1 mod 5)";
  IndexClasses idx = zero_divisor_index_classes(p);
  if (!idx.has_solutions) {
    return "Theorem 2.2 (z(p) = " + std::to_string(idx.entry_point) +
           " even: no zero divisors)";
  }
  if (p % 20 == 13 || p % 20 == 17) {
    // Recover l from n = (p (2l + 1) + 2l - 1) / 4 - 1 when n is in the family.
    std::int64_t num = 4 * (n + 1) - p + 1;
    if (num > 0 && num % (2 * (p + 1)) == 0) {
      return "Theorem 2.1, l=" + std::to_string(num / (2 * (p + 1)));
    }
  }
  return "Theorem 2.2 (zero divisor iff n = " + std::to_string(idx.residue_class) +
         " mod " + std::to_string(idx.entry_point) + ")";
}

PeriodEnumeration enumerate_period(std::int64_t p, std::int64_t max_period) {
  PeriodInfo info = period_info(p);
  if (info.pisano_period > max_period) {
    throw resource_limit_error("enumerate_period: k(" + std::to_string(p) + ") = " +
                               std::to_string(info.pisano_period) +
                               " exceeds horizon " + std::to_string(max_period));
  }
  PeriodEnumeration out{p, info, {}, 0, 0};
  out.reports.reserve(static_cast<std::size_t>(info.pisano_period));
  std::set<std::array<std::int64_t, 4>> zero_divisors, units;
  for (std::int64_t n = 0; n < info.pisano_period; ++n) {
    FibQuatReport r = classify_fib(n, p);
    (r.classification.verdict == Verdict::ZeroDivisor ? zero_divisors : units)
        .insert(r.element.coords());
    out.reports.push_back(std::move(r));
  }
  out.distinct_zero_divisors = static_cast<std::int64_t>(zero_divisors.size());
  out.distinct_units = static_cast<std::int64_t>(units.size());
  return out;
}

}  // namespace finquat
