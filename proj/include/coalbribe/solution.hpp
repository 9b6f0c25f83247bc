#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "coalbribe/costs.hpp"

namespace coalbribe {

/// Outcome of an exact solver run.
///
/// Every solver here computes the least cost of any bribe meeting the goals;
/// the decision answer is `optimal_cost <= budget`. `plan` is a witness of the
/// optimal cost whenever one exists, even if it exceeds the budget.
struct SolveResult {
  std::optional<Cost> optimal_cost;
  bool feasible = false;
  BribePlan plan;
  /// Solver-specific work measure (DP cells, networks solved, search nodes).
  std::uint64_t work = 0;
};

}  // namespace coalbribe
