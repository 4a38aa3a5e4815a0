// Cross-method verification over an (m, r, n) grid, plus golden fixtures
// reproducing published worked examples.

#ifndef HYPERSUM_VERIFY_HPP
#define HYPERSUM_VERIFY_HPP

#include "hypersum/hypersum.hpp"
#include "hypersum/serialize.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace hypersum {

struct CellFailure {
  std::string check;
  std::string method_a;
  std::string method_b;
  std::optional<long> n;           ///< set for value mismatches
  std::optional<long> coeff_index; ///< set for coefficient mismatches
  Json detail;                     ///< both sides, in the standard schemas
};

/// One (m, r) cell. Every applicable check runs; failures are collected.
struct CellResult {
  long m = 0;
  long r = 0;
  std::size_t checks = 0;
  std::vector<CellFailure> failures;

  bool pass() const { return failures.empty(); }
};

struct FixtureResult {
  std::string name;
  bool pass = false;
  Json detail;
};

struct VerifyReport {
  long m_max = 0;
  long r_max = 0;
  long n_max = 0;
  std::vector<Method> methods;
  std::vector<CellResult> cells;
  std::vector<FixtureResult> fixtures;
  double wall_ms = 0;

  bool pass() const;
  std::size_t failure_count() const;
  std::size_t check_count() const;
};

/// Grid defaults: m <= 10, r <= 6, n <= 15.
struct GridBounds {
  long m_max = 10;
  long r_max = 6;
  long n_max = 15;
};

/// Checks every cell 0 <= m <= m_max, 0 <= r <= r_max: agreement of the
/// selected routes (where defined), values against brute force for
/// 0 <= n <= n_max, leading coefficient and constant term, the structure of
/// G_m^(r), and the recurrences and identities linking neighbouring cells.
/// Bounds must be >= 1 (std::invalid_argument).
VerifyReport run_grid(long m_max, long r_max, long n_max,
                      std::span<const Method> methods = all_methods());

/// Exact-equality checks against published worked examples.
VerifyReport golden_fixtures();

/// run_grid followed by golden_fixtures, merged into one report.
VerifyReport run_all(const GridBounds &bounds, std::span<const Method> methods = all_methods());

/// Single cell; exposed for tests.
CellResult check_cell(long m, long r, long n_max, std::span<const Method> methods);

Json to_json(const VerifyReport &report, bool include_timing = true);
std::string summary_table(const VerifyReport &report);

} // namespace hypersum

#endif
