#include "hypersum/verify.hpp"

#include <doctest.h>

#include <algorithm>

using namespace hypersum;

TEST_CASE("small grids pass") {
  const VerifyReport a = run_grid(3, 2, 5);
  CHECK(a.pass());
  CHECK(a.failure_count() == 0);
  CHECK(a.cells.size() == 4 * 3);
  CHECK(run_grid(1, 1, 1).pass());
  CHECK(run_grid(2, 1, 3).cells.size() == 6);
  CHECK_THROWS_AS(run_grid(0, 1, 1), std::invalid_argument);
}

TEST_CASE("golden fixtures pass") {
  const VerifyReport g = golden_fixtures();
  CHECK(g.pass());
  auto has = [&](const std::string &name) {
    return std::any_of(g.fixtures.begin(), g.fixtures.end(),
                       [&](const FixtureResult &f) { return f.name == name && f.pass; });
  };
  CHECK(has("G_5^(7) by determinant"));
  CHECK(has("S_8 in N = n + 1/2"));
  CHECK(has("g_{9,2} relation (r=10)"));
}

TEST_CASE("a corrupted Bernoulli value is located") {
  ScopedBernoulliOverride fault(4, Rational(1, 30));
  const VerifyReport report = run_grid(4, 2, 6);
  CHECK_FALSE(report.pass());
  const auto bad = std::find_if(report.cells.begin(), report.cells.end(),
                                [](const CellResult &c) { return !c.pass(); });
  REQUIRE(bad != report.cells.end());
  // Cell (m, r) and the identities linking it to (m+1, r) and (m, r+1) read
  // Bernoulli numbers up to B_{m+r}, so small cells stay green.
  for (const auto &c : report.cells)
    if (c.m + c.r <= 3)
      CHECK(c.pass());
  CHECK(bad->m + bad->r >= 4);
  const Json j = to_json(report);
  CHECK(j["status"] == "fail");
  CHECK(summary_table(report).find("FAIL") != std::string::npos);
  const CellFailure &f = bad->failures.front();
  CHECK_FALSE(f.check.empty());
}

TEST_CASE("report is deterministic") {
  const Json a = to_json(run_grid(4, 3, 6), false);
  (void)run_grid(2, 5, 4);
  const Json b = to_json(run_grid(4, 3, 6), false);
  CHECK(a == b);
  CHECK(a.dump() == b.dump());
}

TEST_CASE("restricting routes still runs the identity checks") {
  const Method only[] = {Method::q_form, Method::determinant};
  const VerifyReport r = run_grid(3, 3, 4, only);
  CHECK(r.pass());
  CHECK(r.check_count() > 0);
  CHECK(check_cell(5, 2, 8, all_methods()).pass());
}
