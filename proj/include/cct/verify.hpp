#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cct {

struct SuiteResult {
  std::string suite;
  int trials = 0;
  int passed = 0;
  std::vector<std::string> failures;  // first few messages only

  bool ok() const { return passed == trials && failures.empty(); }
};

struct SuiteInfo {
  std::string_view name;
  std::string_view summary;
  int default_trials;
};

/// Cross-check sweeps, one per instance compiler, each pitting a
/// construction against its independent brute-force reference.
const std::vector<SuiteInfo>& verification_suites();

/// Runs `trials` seeded trials (trial i uses seed + i). Unknown names throw.
SuiteResult run_suite(std::string_view name, int trials, std::uint64_t seed);

}  // namespace cct
