#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "finquat/oracle.hpp"

using namespace finquat;
using namespace finquat::oracle;

TEST_CASE("exact sequences and their bounds") {
  CHECK(fib_exact(-1) == 1);
  CHECK(fib_exact(0) == 0);
  CHECK(fib_exact(10) == 55);
  CHECK(fib_exact(21) == 10946);
  CHECK(fib_exact(92) == 7540113804746346429LL);
  CHECK(lucas_exact(0) == 2);
  CHECK(lucas_exact(4) == 7);
  CHECK_THROWS_AS(fib_exact(93), domain_error);
  CHECK_THROWS_AS(fib_exact(-2), domain_error);
  CHECK_THROWS_AS(lucas_exact(91), domain_error);
}

TEST_CASE("naive modular sequences") {
  auto fs = fib_sequence_mod(10, 8);
  CHECK(fs == std::vector<std::int64_t>{0, 1, 1, 2, 3, 5, 8, 3});
  auto ls = lucas_sequence_mod(10, 6);
  CHECK(ls == std::vector<std::int64_t>{2, 1, 3, 4, 7, 1});
  CHECK(sum_of_squares_mod(0, 1, 1, 2, 5) == 1);
  CHECK(sum_of_squares_mod(1, 1, 2, 0, 3) == 0);
}

TEST_CASE("census verification, including the p = 2 erratum") {
  VerificationReport r2 = verify_census(2);
  CHECK(r2.passed);
  REQUIRE(r2.discrepancies.size() == 1);
  CHECK(r2.discrepancies[0].known_erratum);
  CHECK(r2.discrepancies[0].expected_by_paper == "10");
  CHECK(r2.discrepancies[0].computed == "8");

  for (std::int64_t p : {3, 5, 7, 11}) {
    VerificationReport r = verify_census(p);
    CHECK(r.passed);
    CHECK(r.discrepancies.empty());
  }
  CHECK_THROWS_AS(verify_census(29), resource_limit_error);
  CHECK_THROWS_AS(verify_census(9), domain_error);
}

TEST_CASE("fibonacci classification verification") {
  for (std::int64_t p : {2, 3, 5, 13, 17, 37}) {
    VerificationReport r = verify_fib_classifications(p, 3 * pisano_period(p));
    CHECK(r.passed);
    CHECK(r.discrepancies.empty());
  }
  // Even entry point: passes with a tagged discrepancy for the count claim.
  for (std::int64_t p : {7, 11, 29}) {
    VerificationReport r = verify_fib_classifications(p, 3 * pisano_period(p));
    CHECK(r.passed);
    REQUIRE(r.discrepancies.size() == 1);
    CHECK(r.discrepancies[0].known_erratum);
  }
  CHECK_THROWS_AS(verify_fib_classifications(13, 5), domain_error);  // below one period
}

TEST_CASE("gfl verification over grid and theorem instances") {
  GflGrid grid;
  for (std::int64_t pc = -2; pc <= 3; ++pc)
    for (std::int64_t qc = -2; qc <= 3; ++qc) grid.params.push_back({pc, qc});
  grid.moduli = {2, 3, 5, 7, 13};
  grid.horizon = 60;
  VerificationReport r = verify_gfl(grid);
  CHECK(r.passed);
  CHECK(r.discrepancies.empty());

  const std::pair<GflParams, std::int64_t> instances[] = {
      {{13, 3}, 13}, {{3, 13}, 13}, {{17, 7}, 17}, {{7, 17}, 17}};
  for (const auto& [params, rr] : instances) {
    VerificationReport inst = verify_gfl(GflGrid{{params}, {rr}, 60});
    CHECK(inst.passed);
    CHECK(inst.discrepancies.empty());
  }

  // A theorem instance with an even entry point is erratum-tagged but passes.
  VerificationReport even = verify_gfl(GflGrid{{{7, 3}}, {7}, 60});
  CHECK(even.passed);
  REQUIRE(even.discrepancies.size() == 1);
  CHECK(even.discrepancies[0].known_erratum);
}

TEST_CASE("sequence layer is clean and deterministic") {
  std::vector<VerificationReport> a = verify_sequence_layer();
  CHECK(a.size() >= 10);
  for (const VerificationReport& r : a) {
    CAPTURE(r.check_name);
    CHECK(r.passed);
    CHECK(r.discrepancies.empty());
  }
  for (std::size_t i = 1; i < a.size(); ++i) {
    CHECK(a[i - 1].check_name < a[i].check_name);
  }
  std::vector<VerificationReport> b = verify_sequence_layer();
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].check_name == b[i].check_name);
    CHECK(a[i].passed == b[i].passed);
  }
}

TEST_CASE("report merge order is by name") {
  std::vector<VerificationReport> reports;
  reports.push_back({"zeta", "", true, {}});
  reports.push_back({"alpha", "", true, {}});
  reports.push_back({"mid", "", true, {}});
  sort_reports(reports);
  CHECK(reports[0].check_name == "alpha");
  CHECK(reports[1].check_name == "mid");
  CHECK(reports[2].check_name == "zeta");
}

TEST_CASE("finish marks reports by untagged discrepancies") {
  VerificationReport clean{"c", "", false, {}};
  CHECK(finish(clean).passed);
  VerificationReport tagged{"t", "", false, {{"x", "1", "2", true}}};
  CHECK(finish(tagged).passed);
  VerificationReport broken{"b", "", false, {{"x", "1", "2", false}}};
  CHECK_FALSE(finish(broken).passed);
}
