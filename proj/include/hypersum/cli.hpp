// Command-line front end. Kept as a library so tests can drive it in-process.
//
// Exit codes: 0 success, 1 verification failure, 2 invalid arguments,
// 3 internal cross-check mismatch.

#ifndef HYPERSUM_CLI_HPP
#define HYPERSUM_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace hypersum::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitMismatch = 3;

/// args excludes the program name.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

/// Loads/stores the Bernoulli and Stirling tables under `dir`
/// (bernoulli.json, stirling.json). Invalid or missing files are ignored with
/// a diagnostic on `err`.
void load_table_cache(const std::string &dir, std::ostream &err);
void store_table_cache(const std::string &dir, std::ostream &err);

} // namespace hypersum::cli

#endif
