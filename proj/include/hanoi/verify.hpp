#pragma once

// Named verification suites comparing every formula and construction against
// the brute-force oracle. Used by `hanoi verify`.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hanoi/bfs_cache.hpp"

namespace hanoi {

enum class CaseStatus { kPass, kFail, kSkipped, kFinding };

const char* to_string(CaseStatus s);

struct CaseResult {
  std::string key;
  CaseStatus status = CaseStatus::kPass;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<CaseResult> cases;

  std::size_t count(CaseStatus s) const;
  /// Findings and skips do not fail a suite.
  bool passed() const { return count(CaseStatus::kFail) == 0; }
};

struct VerifyOptions {
  /// Overrides the suite's default BFS range.
  std::optional<int> max_disks;
  std::uint64_t seed = 0x5eed'2014;
};

/// phi, szegedy, main1, bousch-h4, conjecture5, lemmas, bounds-sandwich.
const std::vector<std::string>& suite_names();

/// Throws std::invalid_argument on an unknown suite name.
SuiteReport run_suite(const std::string& name, ExactOracle& oracle, const VerifyOptions& options);

}  // namespace hanoi
