#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "asymfun/serialize.hpp"

// The acceptance suite: one entry per criterion, each reporting what it
// measured against what it expected. Shared by the acceptance test binary
// and `asymfun check`.

namespace asymfun {

struct CriterionInfo {
  int id;
  const char* key;
  const char* title;
};

struct CriterionResult {
  int id = 0;
  std::string key;
  std::string title;
  bool passed = false;
  json measured;
  json expected;
  std::string detail;
  double seconds = 0.0;
};

struct VerifyOptions {
  /// Run only criteria whose key contains this substring (empty = all).
  std::string filter;
  std::uint64_t seed = 20240607;
  std::size_t n_walks = 100'000;
  unsigned threads = 0;
};

const std::vector<CriterionInfo>& criteria_list();

/// Runs the selected criteria in order; `on_result` (optional) is called as
/// each one finishes. A criterion that throws is reported as failed.
std::vector<CriterionResult> run_verification(const VerifyOptions& opts,
                                              const std::function<void(const CriterionResult&)>& on_result = {});

json to_json(const CriterionResult& r);

}  // namespace asymfun
