#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "omega/constants.hpp"

namespace omega {

struct VerifyConfig {
  /// Larger grids and more h values; the quick tier runs the stated grids.
  bool full = false;
  unsigned threads = 1;
  std::uint64_t truncation_prime = kDefaultTruncationPrime;
  std::uint64_t seed = 20240229;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
  double time_limit = 0.0;
};

inline constexpr int kCriterionCount = 10;

/// Runs one acceptance criterion (1..10). A criterion fails when its check
/// fails or it overruns its time limit. Exceptions become failures.
CriterionResult run_criterion(int id, const VerifyConfig& config);

/// All criteria in order; on_result sees each one as it finishes.
std::vector<CriterionResult> run_acceptance(const VerifyConfig& config,
                                            const std::function<void(const CriterionResult&)>& on_result = {});

/// "[PASS] 3 h-free density ... (1.2 s)"
std::string format_result(const CriterionResult& r);

// Grid checks shared with the tests.

/// finite, max |r| <= limit, |r_last| <= 2 * median |r|
bool bounded_with_limit(const std::vector<double>& normalized, double limit);
/// finite, |r_last| <= 2 * median |r|, |r_last| <= 1.5 |r_first|
bool bounded_without_drift(const std::vector<double>& normalized);

}  // namespace omega
