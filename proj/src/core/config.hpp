#pragma once

#include <string>

#include "core/errors.hpp"

namespace modstab {

enum class OutputFormat { Json, Csv, Text };

struct RunConfig {
  int max_n = 13;
  int max_i = 2;
  int oracle_max_n = 6;
  int stable_margin = 2;
  OutputFormat format = OutputFormat::Json;
  std::string output_path;  // empty: stdout

  /// Throws ContractViolation when budgets are non-positive or oracle_max_n > max_n.
  void validate() const {
    if (max_n < 1 || max_i < 0 || oracle_max_n < 1 || stable_margin < 0)
      throw ContractViolation("budgets must be positive");
    if (oracle_max_n > max_n) throw ContractViolation("oracle_max_n must not exceed max_n");
  }

  /// Throws BudgetExceeded naming (n, i) when a request is outside the budget.
  void require_budget(int n, int degree) const {
    if (n > max_n || degree > max_i)
      throw BudgetExceeded("budget exceeded at (n, i) = (" + std::to_string(n) + ", " + std::to_string(degree) +
                           "); limits are max_n = " + std::to_string(max_n) +
                           ", max_i = " + std::to_string(max_i));
  }
};

}  // namespace modstab
