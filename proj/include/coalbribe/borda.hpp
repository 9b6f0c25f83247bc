#pragma once

#include <optional>
#include <vector>

#include "coalbribe/instance.hpp"
#include "coalbribe/solution.hpp"

namespace coalbribe::borda {

/// Whether one order can give the anchor exactly `anchor_points` and the other
/// `rest_size` coalition members exactly `rest_points` Borda points in total.
bool attainable(Points rest_points, Points anchor_points, int num_parties, int rest_size);

/// Per-voter least price for 1-/$-bribery; kInfiniteCost when unattainable.
Cost h_price(const ProblemInstance& instance, int voter, Points rest_points, Points anchor_points);

/// Extreme placements of the rest of the coalition around the anchor when the
/// anchor ends at Borda score `anchor_points` with `above` rest members over it.
///
/// Costs are counted in crossed pairs. Members below the anchor range from
/// "left in place" (cost 0, `below_min_points`) to "packed just under the
/// anchor" (`below_max_cost` more pairs, one point per pair). Members above
/// range from "as low as allowed" (`above_min_cost`, `above_min_points`) to
/// "packed at the top" (`above_max_cost`, `above_max_points`). `anchor_cost`
/// counts the pairs the anchor itself crosses.
struct ShiftBounds {
  bool feasible = false;
  Points below_min_points = 0;
  Cost below_max_cost = 0;
  Cost above_min_cost = 0;
  Points above_min_points = 0;
  Cost above_max_cost = 0;
  Points above_max_points = 0;
  Cost anchor_cost = 0;
};

ShiftBounds shift_bounds(const PreferenceOrder& order, const CoalitionMask& coalition,
                         PartyId anchor, int below, int above, Points anchor_points);

/// Fewest crossed pairs of an admissible shift realizing the two scores.
std::optional<int> shift_pairs(const PreferenceOrder& order, const CoalitionMask& coalition,
                               PartyId anchor, Points rest_points, Points anchor_points);

/// Per-voter least price under coalition-shift bribery; kInfiniteCost if none.
Cost h_shift(const ProblemInstance& instance, int voter, Points rest_points, Points anchor_points);

/// A cheapest replacement order realizing the two scores for `voter`.
std::optional<PreferenceOrder> realize(const ProblemInstance& instance, int voter,
                                       Points rest_points, Points anchor_points);

/// One finite per-voter option: the scores it yields and its least price.
struct VoterOption {
  Points rest_points;
  Points anchor_points;
  Cost cost;
};

std::vector<VoterOption> voter_options(const ProblemInstance& instance, int voter);

/// f(i, k_A, k_1) over voter prefixes with per-row backpointers.
class BordaDpTable {
 public:
  BordaDpTable(int num_voters, Points max_coalition, Points max_anchor);

  Points max_coalition() const { return max_coalition_; }
  Points max_anchor() const { return max_anchor_; }
  int rows() const { return static_cast<int>(cost_.size()); }
  /// Row i covers voters 0..i (0-based).
  Cost at(int row, Points coalition_points, Points anchor_points) const;
  Cost& cell(int row, Points coalition_points, Points anchor_points);
  int& choice(int row, Points coalition_points, Points anchor_points);
  int choice_at(int row, Points coalition_points, Points anchor_points) const;
  std::uint64_t cell_count() const;

 private:
  std::size_t index(Points a, Points b) const {
    return static_cast<std::size_t>(a) * (max_anchor_ + 1) + static_cast<std::size_t>(b);
  }
  Points max_coalition_;
  Points max_anchor_;
  std::vector<std::vector<Cost>> cost_;
  std::vector<std::vector<int>> choice_;
};

struct BordaDp {
  std::vector<std::vector<VoterOption>> options;
  BordaDpTable table;
};

BordaDp compute_borda_f(const ProblemInstance& instance);

/// Exact solver for Borda without threshold under 1-, $- and shift bribery.
SolveResult solve_borda_0(const ProblemInstance& instance);

}  // namespace coalbribe::borda
