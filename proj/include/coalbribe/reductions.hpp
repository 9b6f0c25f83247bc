#pragma once

#include <span>
#include <utility>
#include <vector>

#include "coalbribe/instance.hpp"

namespace coalbribe::reductions {

/// Exact cover by 4-sets where every element lies in exactly three sets.
/// Elements are 0..num_elements-1.
struct ExactCover34Instance {
  int num_elements = 0;
  std::vector<std::vector<int>> subsets;

  /// Throws std::domain_error unless the element count is a positive multiple
  /// of 4, there are 3n/4 subsets of 4 distinct elements, and every element
  /// occurs in exactly three of them.
  void validate() const;
};

/// Graph on 2n vertices; asks for an n/n split crossed by at most max_cut edges.
struct MinBisectionInstance {
  int num_vertices = 0;
  std::vector<std::pair<int, int>> edges;
  int max_cut = 0;

  /// Throws std::domain_error on an odd or empty vertex set, a negative bound,
  /// self-loops, duplicate edges or out-of-range endpoints.
  void validate() const;
};

enum class Construction { PluralityShift, BordaUnit };

/// Plurality, coalition-shift with unit slope, one party per subset.
ProblemInstance reduce_x3c_to_plurality_shift_cb(const ExactCover34Instance& source);

/// Borda with unit prices; the threshold is the rational making the activity
/// bound n^2 + 2mn + 2 points.
ProblemInstance reduce_x3c_to_borda_unit_cb(const ExactCover34Instance& source);

/// Borda without threshold, one voter, swap prices encoding the graph.
ProblemInstance reduce_minbisection_to_borda_swap_cb(const MinBisectionInstance& source);

/// Swap image of a multiplicative shift instance: moving a member up costs the
/// voter's slope, moving a non-member up costs budget + 1.
ProblemInstance shift_to_swap(const ProblemInstance& instance);

/// Bribe read off a cover (subset indices) on an instance built by
/// `construction`. A non-cover yields a plan that fails `verify_bribe`.
BribePlan map_cover_to_bribe(std::span<const int> cover, const ProblemInstance& reduced,
                             Construction construction);

/// Bribe lifting the pair parties of `side` (n vertex indices) above the
/// outside party on a reduced bisection instance.
BribePlan map_bisection_to_bribe(std::span<const int> side, const ProblemInstance& reduced);

/// Admissible, within budget, and meets the goals.
bool verify_bribe(const ProblemInstance& instance, const BribePlan& plan);

}  // namespace coalbribe::reductions
