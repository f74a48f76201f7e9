#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "finring/theorems.hpp"

namespace finring {

inline constexpr const char* kEngineVersion = FINRING_VERSION;

struct SuiteConfig {
  std::size_t max_order = kDefaultMaxOrder;
  std::size_t iso_cap = 512;
  std::vector<std::string> catalog;  // empty means default_catalog()
  std::size_t jobs = 1;
  std::uint64_t seed = kDefaultSeed;
  bool timings = false;  // report wall-clock millis; off keeps reports byte-stable
};

/// Z/2..Z/12, GF(q) for q in {2,3,4,5,7,8,9}, pairwise products of order at
/// most 36, and idealizations R(+)R, R(+)R/m of order at most 64.
std::vector<std::string> default_catalog();

/// Verifier names in report order for each catalog entry.
const std::vector<std::string>& verifier_names();

/// Runs every verifier on one ring expression.
std::vector<VerdictReport> verify_entry(const std::string& expr, const VerifyOptions& opts);

struct SuiteResult {
  Json report;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t skipped = 0;

  /// 0 iff nothing failed, otherwise the failure count clamped to 125.
  int exit_code() const { return failed == 0 ? 0 : static_cast<int>(failed < 125 ? failed : 125); }
};

/// Throws PreconditionError on a bad config and ParseError on a bad catalog expression.
SuiteResult run_suite(const SuiteConfig& config);

/// Pretty-printed report with a trailing newline.
std::string report_text(const Json& report);

/// A JSON array of expression strings, or one expression per line ('#' starts a comment).
std::vector<std::string> parse_catalog(const std::string& text);

}  // namespace finring
