#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "coalbribe/instance.hpp"
#include "coalbribe/solution.hpp"

namespace coalbribe::oracle {

struct SearchBudget {
  /// Largest search space (product of per-voter option counts, or subset
  /// states) the oracle will accept.
  std::uint64_t max_expansions = 10'000'000;
  /// Per-voter permutation enumeration is used while m! stays within this.
  std::uint64_t max_permutations = 400'000;
  /// Cost bounding and tally memoization; off means plain full enumeration.
  bool prune = true;
};

/// Thrown when an instance lies outside the search budget.
class Refusal : public std::runtime_error {
 public:
  Refusal(const std::string& what, std::uint64_t required)
      : std::runtime_error(what), required_(required) {}
  std::uint64_t required() const { return required_; }

 private:
  std::uint64_t required_;
};

struct VoterOption {
  PreferenceOrder order;
  Cost cost = 0;
};

/// Every admissible replacement of the voter's order (the order itself
/// included) with its exact price. Refuses when m! exceeds the budget.
std::vector<VoterOption> enumerate_voter_options(const ProblemInstance& instance, int voter,
                                                 const SearchBudget& budget = {});

/// Least cost of any bribe meeting the goals, with a witness; optimal_cost is
/// empty when no bribe of any cost succeeds.
SolveResult oracle_solve(const ProblemInstance& instance, const SearchBudget& budget = {});

/// Decision version: searches only bribes within the instance budget.
/// optimal_cost is set iff some bribe of cost <= budget meets the goals.
SolveResult solve_np_hard(const ProblemInstance& instance, const SearchBudget& budget = {});

}  // namespace coalbribe::oracle
