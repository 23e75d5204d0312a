#include "finquat/cli.hpp"

#include <cstdlib>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

namespace finquat::cli {

namespace {

using nlohmann::json;

std::int64_t env_int(const char* name, std::int64_t fallback) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return fallback;
  try {
    return std::stoll(raw);
  } catch (const std::exception&) {
    throw domain_error(std::string(name) + ": cannot parse '" + raw + "' as an integer");
  }
}

json report_json(const oracle::VerificationReport& report) {
  json discrepancies = json::array();
  for (const oracle::Discrepancy& d : report.discrepancies) {
    discrepancies.push_back({{"input", d.input},
                             {"expected_by_paper", d.expected_by_paper},
                             {"computed", d.computed},
                             {"known_erratum", d.known_erratum}});
  }
  return {{"name", report.check_name},
          {"scope", report.scope},
          {"passed", report.passed},
          {"discrepancies", discrepancies}};
}

void collect_erratum_warnings(const oracle::VerificationReport& report,
                              std::vector<std::string>& warnings) {
  for (const oracle::Discrepancy& d : report.discrepancies) {
    if (d.known_erratum) {
      warnings.push_back("known erratum (" + report.check_name + ", " + d.input +
                         "): stated " + d.expected_by_paper + "; computed " + d.computed);
    }
  }
}

std::vector<std::int64_t> primes_up_to(std::int64_t bound) {
  std::vector<std::int64_t> out;
  for (std::int64_t p = 2; p <= bound; ++p) {
    if (is_prime(p)) out.push_back(p);
  }
  return out;
}

}  // namespace

Guardrails Guardrails::from_env() {
  Guardrails g;
  g.max_brute_p = env_int("FINQUAT_MAX_BRUTE_P", limits::default_max_brute_prime);
  g.max_horizon = env_int("FINQUAT_MAX_HORIZON", limits::default_max_horizon);
  return g;
}

std::string render_quaternion(const Quaternion& x) {
  static constexpr const char* symbol[4] = {"", "i", "j", "k"};
  std::array<std::int64_t, 4> c = x.coords();
  std::string out;
  for (int t = 0; t < 4; ++t) {
    if (c[t] == 0) continue;
    if (!out.empty()) out += " + ";
    if (t == 0) {
      out += std::to_string(c[0]);
    } else if (c[t] == 1) {
      out += symbol[t];
    } else {
      out += std::to_string(c[t]);
      out += "·";
      out += symbol[t];
    }
  }
  return out.empty() ? "0" : out;
}

json quaternion_json(const Quaternion& x) {
  std::array<std::int64_t, 4> c = x.coords();
  return {{"coords", {c[0], c[1], c[2], c[3]}}, {"text", render_quaternion(x)}};
}

json envelope(std::string command, json parameters, json result,
              std::vector<std::string> warnings) {
  return {{"command", std::move(command)},
          {"parameters", std::move(parameters)},
          {"result", std::move(result)},
          {"warnings", warnings}};
}

json cmd_period(std::int64_t m) {
  json result;
  if (is_prime(m)) {
    PeriodInfo info = period_info(m);
    result = {{"modulus", m},
              {"z", info.entry_point},
              {"k", info.pisano_period},
              {"relation", std::string(to_string(info.relation))}};
  } else {
    result = {{"modulus", m},
              {"k", pisano_period(m)},
              {"relation",
               std::string(to_string(PeriodRelation::composite_unclassified))}};
  }
  return envelope("period", {{"m", m}}, std::move(result));
}

json cmd_cycle(std::int64_t m, const Guardrails& guards) {
  std::int64_t k = pisano_period(m);
  if (k > guards.max_horizon) {
    throw resource_limit_error("cycle: k(" + std::to_string(m) + ") = " +
                               std::to_string(k) + " exceeds horizon " +
                               std::to_string(guards.max_horizon));
  }
  json cycle = json::array();
  for (const Residue& v : fib_cycle(m)) cycle.push_back(v.value());
  return envelope("cycle", {{"m", m}},
                  {{"modulus", m}, {"k", k}, {"cycle", std::move(cycle)}});
}

json cmd_classify_fib(std::int64_t n, std::int64_t p) {
  FibQuatReport report = classify_fib(n, p);
  json result = {{"n", n},
                 {"p", p},
                 {"element", quaternion_json(report.element)},
                 {"norm", report.classification.norm_value.value()},
                 {"norm_via_identity", report.norm_via_identity.value()},
                 {"verdict", std::string(to_string(report.classification.verdict))},
                 {"period_position", report.period_position},
                 {"rule", closed_form_rule(n, p)}};
  return envelope("classify-fib", {{"n", n}, {"p", p}}, std::move(result));
}

json cmd_classify_gfl(std::int64_t p_coef, std::int64_t q_coef, std::int64_t n,
                      std::int64_t r) {
  GflParams params{p_coef, q_coef};
  Classification c = classify_gfl(params, n, r);
  std::string rule;
  try {
    rule = gfl_zero_divisor_condition(params, r).rule;
  } catch (const unsupported_case_error&) {
    rule = "no closed form in paper; norm evaluated directly";
  }
  json result = {{"pc", p_coef},
                 {"qc", q_coef},
                 {"n", n},
                 {"r", r},
                 {"element", quaternion_json(gfl_quaternion(params, n, r))},
                 {"norm", c.norm_value.value()},
                 {"verdict", std::string(to_string(c.verdict))},
                 {"rule", rule}};
  return envelope("classify-gfl", {{"pc", p_coef}, {"qc", q_coef}, {"n", n}, {"r", r}},
                  std::move(result));
}

json cmd_enumerate(std::int64_t p, const Guardrails& guards) {
  PeriodEnumeration en = enumerate_period(p, guards.max_horizon);
  json positions = json::array();
  for (const FibQuatReport& r : en.reports) {
    positions.push_back({{"n", r.index},
                         {"element", quaternion_json(r.element)},
                         {"norm", r.classification.norm_value.value()},
                         {"verdict", std::string(to_string(r.classification.verdict))}});
  }
  std::vector<std::string> warnings;
  if (p > 5 && en.period.entry_point % 2 == 0) {
    warnings.push_back("z(p) even: Theorem 2.2 ii count does not apply (z(" +
                       std::to_string(p) + ") = " +
                       std::to_string(en.period.entry_point) +
                       "; no zero-divisor positions in the period)");
  }
  json result = {{"p", p},
                 {"z", en.period.entry_point},
                 {"k", en.period.pisano_period},
                 {"positions", std::move(positions)},
                 {"counts",
                  {{"zero_divisors", en.distinct_zero_divisors},
                   {"units", en.distinct_units}}}};
  return envelope("enumerate", {{"p", p}}, std::move(result), std::move(warnings));
}

json cmd_census(std::int64_t p, std::string_view mode, const Guardrails& guards) {
  require_prime(p, "census");
  bool want_formula, want_brute;
  if (mode == "auto") {
    want_brute = p <= guards.max_brute_p;
    want_formula = p != 2;
    if (!want_brute && p == 2) want_brute = true;  // 16 elements; always affordable
  } else if (mode == "formula") {
    want_formula = true;
    want_brute = false;
  } else if (mode == "brute-force") {
    want_formula = false;
    want_brute = true;
  } else {
    throw domain_error("census: unknown mode '" + std::string(mode) +
                       "' (expected auto, formula or brute-force)");
  }

  json result = {{"p", p}};
  std::vector<std::string> warnings;
  std::int64_t formula_count = 0, brute_count = 0;
  if (want_formula) {
    formula_count = zero_divisor_census(p, CensusMode::formula);
    result["formula"] = formula_count;
  }
  if (want_brute) {
    if (p > guards.max_brute_p && p != 2) {
      throw resource_limit_error("census: p = " + std::to_string(p) +
                                 " exceeds the brute-force guardrail " +
                                 std::to_string(guards.max_brute_p));
    }
    brute_count = zero_divisor_census(p, CensusMode::brute_force);
    result["brute_force"] = brute_count;
    if (p == 2) {
      warnings.push_back(
          "known erratum: the count p^3 + p^2 - p = 10 is claimed at p = 2, but "
          "exhaustive enumeration of all 16 elements yields 8");
    }
  }
  if (want_formula && want_brute) result["match"] = formula_count == brute_count;
  return envelope("census", {{"p", p}, {"mode", std::string(mode)}}, std::move(result),
                  std::move(warnings));
}

json cmd_sun_check(std::int64_t p) {
  SunCongruence s = sun_congruence_check(p);
  json result = {{"p", p},
                 {"case", p % 4 == 1 ? "p = 1 (mod 4)" : "p = 3 (mod 4)"},
                 {"lhs", s.lhs.value()},
                 {"rhs", s.rhs.value()},
                 {"holds", s.holds}};
  return envelope("sun-check", {{"p", p}}, std::move(result));
}

VerifyOutcome cmd_verify(std::string_view suite, std::int64_t max_p,
                         const Guardrails& guards) {
  bool census = suite == "census" || suite == "all";
  bool fib = suite == "fib" || suite == "all";
  bool gfl = suite == "gfl" || suite == "all";
  bool sequences = suite == "sequences" || suite == "all";
  if (!census && !fib && !gfl && !sequences) {
    throw domain_error("verify: unknown suite '" + std::string(suite) +
                       "' (expected census, fib, gfl, sequences or all)");
  }

  std::vector<oracle::VerificationReport> reports;
  if (census) {
    std::int64_t bound = std::min({max_p, guards.max_brute_p, limits::max_census_prime});
    for (std::int64_t p : primes_up_to(bound)) {
      reports.push_back(oracle::verify_census(p));
    }
  }
  if (fib) {
    for (std::int64_t p : {2, 3, 5, 7, 11, 13, 17, 29, 37}) {
      if (p > max_p) continue;
      std::int64_t horizon = 3 * pisano_period(p);
      if (horizon > guards.max_horizon) {
        throw resource_limit_error("verify: horizon for p = " + std::to_string(p) +
                                   " exceeds the guardrail");
      }
      reports.push_back(oracle::verify_fib_classifications(p, horizon));
    }
  }
  if (gfl) {
    oracle::GflGrid grid;
    for (std::int64_t pc = -2; pc <= 3; ++pc)
      for (std::int64_t qc = -2; qc <= 3; ++qc) grid.params.push_back({pc, qc});
    for (std::int64_t r : {2, 3, 5, 7, 13}) {
      if (r <= max_p) grid.moduli.push_back(r);
    }
    grid.horizon = 60;
    if (!grid.moduli.empty()) reports.push_back(oracle::verify_gfl(grid));
    const std::pair<GflParams, std::int64_t> instances[] = {
        {{13, 3}, 13}, {{3, 13}, 13}, {{17, 7}, 17}, {{7, 17}, 17}};
    for (const auto& [params, r] : instances) {
      if (r > max_p) continue;
      reports.push_back(oracle::verify_gfl(oracle::GflGrid{{params}, {r}, 60}));
    }
  }
  if (sequences) {
    for (oracle::VerificationReport& r : oracle::verify_sequence_layer()) {
      reports.push_back(std::move(r));
    }
  }
  oracle::sort_reports(reports);

  json checks = json::array();
  std::vector<std::string> warnings;
  bool all_passed = true;
  for (const oracle::VerificationReport& r : reports) {
    checks.push_back(report_json(r));
    collect_erratum_warnings(r, warnings);
    all_passed = all_passed && r.passed;
  }
  json env = envelope("verify", {{"suite", std::string(suite)}, {"max_p", max_p}},
                      {{"checks", std::move(checks)}, {"all_passed", all_passed}},
                      std::move(warnings));
  return VerifyOutcome{std::move(env), all_passed};
}

namespace {

void render_value(const json& value, int indent, std::ostringstream& out);

void render_object(const json& obj, int indent, std::ostringstream& out) {
  std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  for (const auto& [key, value] : obj.items()) {
    if (value.is_object() || (value.is_array() && !value.empty() && value[0].is_object())) {
      out << pad << key << ":\n";
      render_value(value, indent + 1, out);
    } else {
      out << pad << key << " = " << (value.is_string() ? value.get<std::string>()
                                                       : value.dump())
          << "\n";
    }
  }
}

void render_value(const json& value, int indent, std::ostringstream& out) {
  std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  if (value.is_object()) {
    render_object(value, indent, out);
  } else if (value.is_array()) {
    for (const json& item : value) {
      if (item.is_object()) {
        out << pad << "-\n";
        render_object(item, indent + 1, out);
      } else {
        out << pad << "- " << item.dump() << "\n";
      }
    }
  } else {
    out << pad << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
  }
}

}  // namespace

std::string to_table(const json& env) {
  std::ostringstream out;
  out << "command: " << env.at("command").get<std::string>() << "\n";
  if (!env.at("parameters").empty()) {
    out << "parameters:\n";
    render_object(env.at("parameters"), 1, out);
  }
  out << "result:\n";
  render_value(env.at("result"), 1, out);
  for (const json& w : env.at("warnings")) {
    out << "warning: " << w.get<std::string>() << "\n";
  }
  return out.str();
}

int run(int argc, const char* const* argv) {
  CLI::App app{"Fibonacci and Fibonacci-Lucas quaternions over Z_p: classification, "
               "enumeration and verification"};
  app.require_subcommand(1);
  app.fallthrough();

  Guardrails guards = Guardrails::from_env();
  std::string format = "json";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "table"}));
  app.add_option("--max-brute-p", guards.max_brute_p,
                 "Largest prime enumerated with brute force (env FINQUAT_MAX_BRUTE_P)");
  app.add_option("--max-horizon", guards.max_horizon,
                 "Largest period or index range enumerated (env FINQUAT_MAX_HORIZON)");

  std::int64_t m = 0, n = 0, p = 0, r = 0, p_coef = 0, q_coef = 0;
  std::int64_t max_p = 37;
  std::string mode = "auto", suite = "all";

  CLI::App* c_period = app.add_subcommand("period", "Pisano period and entry point");
  c_period->add_option("m", m, "Modulus (>= 2)")->required();

  CLI::App* c_cycle = app.add_subcommand("cycle", "One full Fibonacci cycle mod m");
  c_cycle->add_option("m", m, "Modulus (>= 2)")->required();

  CLI::App* c_cfib = app.add_subcommand("classify-fib",
                                        "Classify the Fibonacci quaternion F_n over Z_p");
  c_cfib->add_option("--n", n, "Index")->required();
  c_cfib->add_option("--p", p, "Prime modulus")->required();

  CLI::App* c_cgfl = app.add_subcommand(
      "classify-gfl", "Classify the Fibonacci-Lucas quaternion G_n^{p,q} over Z_r");
  c_cgfl->add_option("--pc", p_coef, "Coefficient p of f_{n-1}")->required();
  c_cgfl->add_option("--qc", q_coef, "Coefficient q of l_n")->required();
  c_cgfl->add_option("--n", n, "Index")->required();
  c_cgfl->add_option("--r", r, "Prime modulus")->required();

  CLI::App* c_enum = app.add_subcommand("enumerate",
                                        "Every F_n across one Pisano period mod p");
  c_enum->add_option("--p", p, "Prime modulus")->required();

  CLI::App* c_census = app.add_subcommand("census",
                                          "Count non-invertible quaternions over Z_p");
  c_census->add_option("--p", p, "Prime modulus")->required();
  c_census->add_option("--mode", mode, "auto, formula or brute-force")
      ->check(CLI::IsMember({"auto", "formula", "brute-force"}));

  CLI::App* c_verify = app.add_subcommand("verify",
                                          "Re-derive every claim and report diffs");
  c_verify->add_option("--suite", suite, "census, fib, gfl, sequences or all")
      ->check(CLI::IsMember({"census", "fib", "gfl", "sequences", "all"}));
  c_verify->add_option("--max-p", max_p, "Largest prime exercised per check set");

  CLI::App* c_sun = app.add_subcommand("sun-check",
                                       "Half-period Fibonacci congruence mod p");
  c_sun->add_option("--p", p, "Prime modulus, not 2 or 5")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);  // prints help, exit 0
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  int exit_code = 0;
  json env;
  try {
    if (c_period->parsed()) {
      env = cmd_period(m);
    } else if (c_cycle->parsed()) {
      env = cmd_cycle(m, guards);
    } else if (c_cfib->parsed()) {
      env = cmd_classify_fib(n, p);
    } else if (c_cgfl->parsed()) {
      env = cmd_classify_gfl(p_coef, q_coef, n, r);
    } else if (c_enum->parsed()) {
      env = cmd_enumerate(p, guards);
    } else if (c_census->parsed()) {
      env = cmd_census(p, mode, guards);
    } else if (c_verify->parsed()) {
      VerifyOutcome outcome = cmd_verify(suite, max_p, guards);
      env = std::move(outcome.envelope);
      exit_code = outcome.all_passed ? 0 : 1;
    } else if (c_sun->parsed()) {
      env = cmd_sun_check(p);
    }
  } catch (const resource_limit_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const invariant_violation& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return 1;
  }

  if (format == "table") {
    std::cout << to_table(env);
  } else {
    std::cout << env.dump(2) << "\n";
  }
  return exit_code;
}

}  // namespace finquat::cli
