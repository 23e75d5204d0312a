#include "finquat/genfibquat.hpp"

#include <string>
#include <utility>

namespace finquat {

namespace {

GflCondition make_class(std::int64_t modulus, std::int64_t residue, std::string rule) {
  return GflCondition{GflConditionKind::residue_class, modulus, residue, 0,
                      std::move(rule)};
}

GflCondition make_all(std::string rule) {
  return GflCondition{GflConditionKind::all_indices, 0, 0, 0, std::move(rule)};
}

// 2n + offset = 0 (mod z) for odd z; no solutions for even z.
GflCondition make_entry_point(std::int64_t z, std::int64_t offset, std::string rule) {
  if (z % 2 == 0) {
    return GflCondition{GflConditionKind::no_solutions, z, 0, offset,
                        std::move(rule) + " (entry point even: no solutions)"};
  }
  std::int64_t residue = inverse(Residue(2, z)).value() % z * ((z - offset % z) % z) % z;
  return GflCondition{GflConditionKind::entry_point_class, z, residue, offset,
                      std::move(rule)};
}

GflCondition condition_mod_5(std::int64_t pc, std::int64_t qc) {
  std::int64_t p = Residue(pc, 5).value(), q = Residue(qc, 5).value();
  if (p == 0) return make_all("Prop 3.4 i");
  if (p == q) return make_class(5, 4, "Prop 3.4 ii");
  if ((p + q) % 5 == 0) return make_class(5, 0, "Prop 3.4 iii");
  auto in = [&](std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d,
                std::int64_t e, std::int64_t f, std::int64_t g, std::int64_t h) {
    return (p == a && q == b) || (p == c && q == d) || (p == e && q == f) ||
           (p == g && q == h);
  };
  if (in(1, 2, 3, 1, 2, 4, 4, 3)) return make_class(5, 1, "Prop 3.4 iv");
  if (in(2, 1, 3, 4, 4, 2, 1, 3)) return make_class(5, 3, "Prop 3.4 v");
  if (q == 0) return make_class(5, 2, "Prop 3.4 vi");
  // The six cases cover all 25 residue pairs; kept as a guarded fallback.
  return GflCondition{GflConditionKind::no_closed_form, 0, 0, 0,
                      "no closed form in paper"};
}

}  // namespace

Residue gfl_number(const GflParams& params, std::int64_t n, std::int64_t m) {
  if (n < 0) throw domain_error("gfl_number: index must be >= 0");
  Residue p(params.p_coef, m), q(params.q_coef, m);
  return p * fib_mod(n - 1, m) + q * lucas_mod(n, m);
}

Quaternion gfl_quaternion(const GflParams& params, std::int64_t n, std::int64_t r) {
  require_prime(r, "gfl_quaternion");
  if (n < 0) throw domain_error("gfl_quaternion: index must be >= 0");
  QuatAlgebra alg(r, -1, -1);
  return Quaternion(alg, gfl_number(params, n, r).value(),
                    gfl_number(params, n + 1, r).value(),
                    gfl_number(params, n + 2, r).value(),
                    gfl_number(params, n + 3, r).value());
}

Residue gfl_norm(const GflParams& params, std::int64_t n, std::int64_t r) {
  require_prime(r, "gfl_norm");
  if (n < 0) throw domain_error("gfl_norm: index must be >= 0");
  Residue p(params.p_coef, r), q(params.q_coef, r);
  Residue f1 = fib_mod(2 * n + 1, r), f3 = fib_mod(2 * n + 3, r);
  return Residue(3, r) * p * p * f1 + Residue(15, r) * q * q * f3 +
         Residue(6, r) * p * q * (f1 + f3);
}

Classification classify_gfl(const GflParams& params, std::int64_t n, std::int64_t r) {
  Quaternion element = gfl_quaternion(params, n, r);
  Classification c = classify(element);
  if (!(c.norm_value == gfl_norm(params, n, r))) {
    throw invariant_violation("coordinate norm and closed-form norm disagree for G_" +
                              std::to_string(n) + " mod " + std::to_string(r));
  }
  try {
    GflCondition cond = gfl_zero_divisor_condition(params, r);
    if (cond.kind != GflConditionKind::no_closed_form &&
        cond.predicts_zero_norm(n) != c.norm_value.is_zero()) {
      throw invariant_violation("residue rule \"" + cond.rule +
                                "\" and norm criterion disagree at n = " +
                                std::to_string(n) + ", r = " + std::to_string(r));
    }
  } catch (const unsupported_case_error&) {
    // No rule covers (params, r); the norm verdict stands on its own.
  }
  return c;
}

bool GflCondition::predicts_zero_norm(std::int64_t n) const {
  switch (kind) {
    case GflConditionKind::residue_class:
    case GflConditionKind::entry_point_class:
      return Residue(n, modulus).value() == residue;
    case GflConditionKind::all_indices: return true;
    case GflConditionKind::no_solutions: return false;
    case GflConditionKind::no_closed_form: break;
  }
  throw domain_error("predicts_zero_norm: no closed form to evaluate");
}

std::int64_t GflCondition::index_for(std::int64_t l) const {
  if (kind != GflConditionKind::entry_point_class) {
    throw domain_error("index_for: condition is not an entry-point class");
  }
  if (l < 0) throw domain_error("index_for: l must be >= 0");
  return ((2 * l + 1) * modulus - formula_offset) / 2;
}

GflCondition gfl_zero_divisor_condition(const GflParams& params, std::int64_t r) {
  if (r == 2) {
    bool p_odd = Residue(params.p_coef, 2).value() == 1;
    bool q_odd = Residue(params.q_coef, 2).value() == 1;
    if (!p_odd && q_odd) return make_class(3, 0, "Prop 3.2 i");
    if (p_odd && !q_odd) return make_class(3, 1, "Prop 3.2 ii");
    if (!p_odd && !q_odd) return make_all("Prop 3.2 iii");
    return make_class(3, 2, "Prop 3.2 iv");
  }
  if (r == 3) return make_all("Prop 3.3");
  if (r == 5) return condition_mod_5(params.p_coef, params.q_coef);

  if (r == params.p_coef || r == params.q_coef) {
    if (params.p_coef == params.q_coef || !is_prime(params.p_coef) ||
        !is_prime(params.q_coef) || r <= 5) {
      throw unsupported_case_error(
          "gfl_zero_divisor_condition: the entry-point rules need distinct prime "
          "coefficients with the one equal to r greater than 5");
    }
    // Mod r = p_coef the norm collapses to 15 q^2 f_{2n+3}; mod r = q_coef to
    // 3 p^2 f_{2n+1}. The scalar factor is a unit, so only the entry point of
    // r in the Fibonacci sequence decides.
    std::int64_t offset = r == params.p_coef ? 3 : 1;
    const char* rule = r == params.p_coef ? "Theorem 3.1" : "Theorem 3.2";
    std::int64_t z = entry_point(r);
    return make_entry_point(z, offset,
                            rule + std::string(", z(") + std::to_string(r) +
                                ") = " + std::to_string(z));
  }
  throw unsupported_case_error("gfl_zero_divisor_condition: no rule for r = " +
                               std::to_string(r) +
                               "; evaluate norms per index instead");
}

}  // namespace finquat
