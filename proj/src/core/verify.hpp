#pragma once

#include <string>
#include <vector>

#include "core/config.hpp"
#include "core/report.hpp"

namespace modstab {

struct CheckResult {
  std::string id;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

/// Ids of the verification suite, in execution order.
const std::vector<std::string>& verification_check_ids();

/// Runs one check; exceptions inside a check become a failed result.
CheckResult run_check(const std::string& id, const RunConfig& config);

std::vector<CheckResult> run_verification(const RunConfig& config);

/// Summary document: {"passed", "config", "checks": [...]}, one row per check.
Document verification_document(const std::vector<CheckResult>& results, const RunConfig& config);

/// Exact value at x of the interpolating polynomial through (xs[k], ys[k]).
Rational interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys, const Rational& x);

}  // namespace modstab
