#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "coalbribe/election.hpp"

namespace coalbribe {

using Cost = std::int64_t;

/// Sentinel for unreachable DP cells; large enough to dominate every real sum,
/// small enough that adding two never overflows.
inline constexpr Cost kInfiniteCost = std::numeric_limits<Cost>::max() / 4;

enum class BriberyType { Unit, Dollar, Swap, Shift };

std::string to_string(BriberyType type);

/// Membership flags of the coalition, indexed by party.
using CoalitionMask = std::vector<bool>;

CoalitionMask make_mask(std::span<const PartyId> coalition, int num_parties);

/// Non-decreasing price of a shift bribe as a function of the number of
/// crossed pairs, tabulated for 0..m(m-1)/2 pairs.
class ShiftTable {
 public:
  static ShiftTable multiplicative(Cost slope, int num_parties);
  /// Throws std::domain_error unless values[0] == 0 and values are non-decreasing
  /// and non-negative.
  static ShiftTable from_values(std::vector<Cost> values);

  Cost operator()(int pairs) const { return values_.at(pairs); }
  const std::vector<Cost>& values() const { return values_; }
  std::optional<Cost> slope() const { return slope_; }

  friend bool operator==(const ShiftTable&, const ShiftTable&) = default;

 private:
  std::vector<Cost> values_;
  std::optional<Cost> slope_;
};

/// sw(x, y): price of moving y from below x to above x. Indexed [x][y].
using SwapPrices = std::vector<std::vector<Cost>>;

/// One of the four price structures, with per-voter parameters.
class CostModel {
 public:
  static CostModel unit(int num_voters);
  static CostModel dollar(std::vector<Cost> prices);
  static CostModel swap(std::vector<SwapPrices> prices);
  static CostModel shift(std::vector<ShiftTable> tables);

  BriberyType type() const { return type_; }
  int num_voters() const { return num_voters_; }

  /// Flat price p_i (Unit reports 1).
  Cost price(int voter) const;
  const SwapPrices& swap_prices(int voter) const { return swap_.at(voter); }
  const ShiftTable& shift_table(int voter) const { return shift_.at(voter); }

  friend bool operator==(const CostModel&, const CostModel&) = default;

 private:
  BriberyType type_ = BriberyType::Unit;
  int num_voters_ = 0;
  std::vector<Cost> prices_;
  std::vector<SwapPrices> swap_;
  std::vector<ShiftTable> shift_;
};

/// A bribe: replacement orders for some voters (others unchanged).
struct BribePlan {
  std::map<int, PreferenceOrder> replacements;
  Cost total_cost = 0;

  /// Resulting order sequence.
  std::vector<PreferenceOrder> apply(const Election& election) const;
};

/// Pairs (x, y) with y below x in `before` and above x in `after`.
std::vector<std::pair<PartyId, PartyId>> inverted_pairs(const PreferenceOrder& before,
                                                        const PreferenceOrder& after);

/// Number of inverted pairs (Kendall tau distance).
int count_inverted_pairs(const PreferenceOrder& before, const PreferenceOrder& after);

/// Whether `after` is a permitted replacement of `before`. Only shift bribery
/// restricts moves: coalition members may never fall below a non-member they
/// were above, and non-members keep their relative order.
bool admissible(const CostModel& model, const CoalitionMask& coalition,
                const PreferenceOrder& before, const PreferenceOrder& after);

/// Price of replacing voter `voter`'s order; nullopt when inadmissible.
std::optional<Cost> bribe_cost(const CostModel& model, const CoalitionMask& coalition, int voter,
                               const PreferenceOrder& before, const PreferenceOrder& after);

/// Summed price of a plan; nullopt if any replacement is inadmissible.
std::optional<Cost> plan_cost(const CostModel& model, const CoalitionMask& coalition,
                              const Election& election, const BribePlan& plan);

}  // namespace coalbribe
