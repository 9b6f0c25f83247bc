#include "coalbribe/borda.hpp"

#include <algorithm>
#include <stdexcept>

namespace coalbribe::borda {

namespace {

// Slot ranges are inclusive point values a member can take: below the anchor
// 0..k1-1, above it k1+1..m-1. Sums of `count` distinct values from [lo, hi].
Points min_sum(int count, Points lo) { return count * lo + Points{count} * (count - 1) / 2; }
Points max_sum(int count, Points hi) { return count * hi - Points{count} * (count - 1) / 2; }

// Picks `count` distinct values in [lo, hi] summing to `target`, largest first.
std::vector<Points> distinct_values_with_sum(int count, Points lo, Points hi, Points target) {
  std::vector<Points> values(count);
  for (int k = 0; k < count; ++k) values[k] = lo + k;
  Points extra = target - min_sum(count, lo);
  for (int k = count - 1; k >= 0 && extra > 0; --k) {
    Points cap = hi - (count - 1 - k);
    Points inc = std::min(extra, cap - values[k]);
    values[k] += inc;
    extra -= inc;
  }
  if (extra != 0) throw std::logic_error("target sum outside the attainable range");
  std::reverse(values.begin(), values.end());
  return values;
}

struct PriceSplit {
  int below;
  Points below_sum;
};

std::optional<PriceSplit> price_split(Points rest_points, Points anchor_points, int m, int a) {
  if (anchor_points < 0 || anchor_points > m - 1) return std::nullopt;
  for (int below = 0; below <= a; ++below) {
    int above = a - below;
    if (below > anchor_points || above > m - 1 - anchor_points) continue;
    Points lo_below = min_sum(below, 0);
    Points hi_below = below ? max_sum(below, anchor_points - 1) : 0;
    Points lo_above = above ? min_sum(above, anchor_points + 1) : 0;
    Points hi_above = above ? max_sum(above, m - 1) : 0;
    if (rest_points < lo_below + lo_above || rest_points > hi_below + hi_above) continue;
    Points below_sum = std::max(lo_below, rest_points - hi_above);
    return PriceSplit{below, below_sum};
  }
  return std::nullopt;
}

// Coalition layout of one order under shift bribery. Non-members keep their
// relative order, so a member's placement is fully described by its index in
// the coalition sequence and its gap (number of non-members above it).
struct ShiftLayout {
  int m = 0;
  std::vector<PartyId> outsiders;  // in order
  std::vector<PartyId> rest;       // coalition minus anchor, in order
  std::vector<int> rest_gap;       // original gaps, non-decreasing
  int anchor_gap = 0;
  int anchor_index = 0;            // original index of the anchor among members
};

ShiftLayout make_layout(const PreferenceOrder& order, const CoalitionMask& coalition,
                        PartyId anchor) {
  if (anchor < 0 || anchor >= order.size() || !coalition[anchor]) {
    throw std::domain_error("anchor must be a coalition member");
  }
  ShiftLayout layout;
  layout.m = order.size();
  int members = 0;
  for (PartyId p : order.ranking()) {
    if (!coalition[p]) {
      layout.outsiders.push_back(p);
    } else if (p == anchor) {
      layout.anchor_gap = static_cast<int>(layout.outsiders.size());
      layout.anchor_index = members++;
    } else {
      layout.rest.push_back(p);
      layout.rest_gap.push_back(static_cast<int>(layout.outsiders.size()));
      ++members;
    }
  }
  return layout;
}

Points member_points(int m, int index, int gap) { return m - 1 - index - gap; }

ShiftBounds layout_bounds(const ShiftLayout& layout, int above, Points anchor_points) {
  ShiftBounds b;
  const int a = static_cast<int>(layout.rest.size());
  const int m = layout.m;
  Points anchor_gap = m - 1 - above - anchor_points;
  if (above < 0 || above > a || anchor_gap < 0 || anchor_gap > layout.anchor_gap) return b;
  for (int j = above; j < a; ++j) {
    if (layout.rest_gap[j] < anchor_gap) return b;
  }
  b.feasible = true;
  for (int j = above; j < a; ++j) {
    b.below_min_points += member_points(m, j + 1, layout.rest_gap[j]);
    b.below_max_cost += layout.rest_gap[j] - anchor_gap;
  }
  for (int j = 0; j < above; ++j) {
    Points low_gap = std::min<Points>(layout.rest_gap[j], anchor_gap);
    b.above_min_cost += layout.rest_gap[j] - low_gap;
    b.above_min_points += member_points(m, j, static_cast<int>(low_gap));
    b.above_max_cost += layout.rest_gap[j];
    b.above_max_points += member_points(m, j, 0);
  }
  b.anchor_cost = (layout.anchor_gap - anchor_gap) + std::abs(layout.anchor_index - above);
  return b;
}

struct ShiftChoice {
  int above;
  Cost extra;  // points bought beyond the cheapest layout
  int pairs;
};

std::optional<ShiftChoice> best_shift(const ShiftLayout& layout, Points rest_points,
                                      Points anchor_points) {
  if (anchor_points < 0 || anchor_points > layout.m - 1) return std::nullopt;
  std::optional<ShiftChoice> best;
  const int a = static_cast<int>(layout.rest.size());
  for (int above = 0; above <= a; ++above) {
    ShiftBounds b = layout_bounds(layout, above, anchor_points);
    if (!b.feasible) continue;
    Points extra = rest_points - b.below_min_points - b.above_min_points;
    if (extra < 0 || extra > b.below_max_cost + b.above_max_cost - b.above_min_cost) continue;
    int pairs = static_cast<int>(extra + b.anchor_cost + b.above_min_cost);
    if (!best || pairs < best->pairs) best = ShiftChoice{above, extra, pairs};
  }
  return best;
}

PreferenceOrder build_shift_order(const ShiftLayout& layout, const ShiftChoice& choice,
                                  Points anchor_points, PartyId anchor) {
  const int a = static_cast<int>(layout.rest.size());
  const int m = layout.m;
  const int above = choice.above;
  const int anchor_gap = static_cast<int>(m - 1 - above - anchor_points);

  // Members in their new sequence with the gap each one ends on.
  std::vector<PartyId> members;
  std::vector<int> gaps;
  for (int j = 0; j < above; ++j) {
    members.push_back(layout.rest[j]);
    gaps.push_back(std::min(layout.rest_gap[j], anchor_gap));
  }
  members.push_back(anchor);
  gaps.push_back(anchor_gap);
  for (int j = above; j < a; ++j) {
    members.push_back(layout.rest[j]);
    gaps.push_back(layout.rest_gap[j]);
  }

  // Spend extra points below the anchor first, then above it. Lowering the
  // first gap that can still drop keeps gaps non-decreasing.
  Cost extra = choice.extra;
  auto lower = [&](int first, int last, int floor) {
    for (int k = first; k < last && extra > 0; ++k) {
      int drop = static_cast<int>(std::min<Cost>(extra, gaps[k] - floor));
      gaps[k] -= drop;
      extra -= drop;
    }
  };
  lower(above + 1, a + 1, anchor_gap);
  lower(0, above, 0);
  if (extra != 0) throw std::logic_error("shift layout cannot absorb the requested points");

  std::vector<PartyId> ranking;
  ranking.reserve(m);
  std::size_t next = 0;
  for (int gap = 0; gap <= static_cast<int>(layout.outsiders.size()); ++gap) {
    while (next < members.size() && gaps[next] == gap) ranking.push_back(members[next++]);
    if (gap < static_cast<int>(layout.outsiders.size())) ranking.push_back(layout.outsiders[gap]);
  }
  return PreferenceOrder(std::move(ranking));
}

void require_borda0(const ProblemInstance& instance) {
  if (instance.rule != ScoringRule::Borda || instance.threshold != 0) {
    throw std::invalid_argument("Borda solver requires Borda with zero threshold");
  }
  BriberyType type = instance.costs.type();
  if (type == BriberyType::Swap) {
    throw std::invalid_argument("Borda solver does not handle swap bribery");
  }
}

int rest_size(const ProblemInstance& instance) {
  return static_cast<int>(instance.coalition.size()) - 1;
}

std::pair<Points, Points> realized_points(const ProblemInstance& instance, int voter) {
  const PreferenceOrder& order = instance.election.order(voter);
  PartyId anchor = instance.anchor();
  Points anchor_points = score(order, anchor, ScoringRule::Borda);
  Points rest = 0;
  for (PartyId p : instance.coalition) {
    if (p != anchor) rest += score(order, p, ScoringRule::Borda);
  }
  return {rest, anchor_points};
}

}  // namespace

bool attainable(Points rest_points, Points anchor_points, int num_parties, int rest_size) {
  if (rest_size < 0 || rest_size >= num_parties) return false;
  return price_split(rest_points, anchor_points, num_parties, rest_size).has_value();
}

Cost h_price(const ProblemInstance& instance, int voter, Points rest_points, Points anchor_points) {
  BriberyType type = instance.costs.type();
  if (type != BriberyType::Unit && type != BriberyType::Dollar) {
    throw std::invalid_argument("h_price requires unit or dollar bribery");
  }
  if (realized_points(instance, voter) == std::pair{rest_points, anchor_points}) return 0;
  if (!attainable(rest_points, anchor_points, instance.election.num_parties(), rest_size(instance))) {
    return kInfiniteCost;
  }
  return instance.costs.price(voter);
}

ShiftBounds shift_bounds(const PreferenceOrder& order, const CoalitionMask& coalition,
                         PartyId anchor, int below, int above, Points anchor_points) {
  ShiftLayout layout = make_layout(order, coalition, anchor);
  if (below < 0 || above < 0 || below + above != static_cast<int>(layout.rest.size())) {
    throw std::domain_error("split sizes must cover the rest of the coalition");
  }
  if (anchor_points < 0 || anchor_points > layout.m - 1) return {};
  return layout_bounds(layout, above, anchor_points);
}

std::optional<int> shift_pairs(const PreferenceOrder& order, const CoalitionMask& coalition,
                               PartyId anchor, Points rest_points, Points anchor_points) {
  auto choice = best_shift(make_layout(order, coalition, anchor), rest_points, anchor_points);
  if (!choice) return std::nullopt;
  return choice->pairs;
}

Cost h_shift(const ProblemInstance& instance, int voter, Points rest_points, Points anchor_points) {
  if (instance.costs.type() != BriberyType::Shift) {
    throw std::invalid_argument("h_shift requires shift bribery");
  }
  auto pairs = shift_pairs(instance.election.order(voter), instance.coalition_mask(),
                           instance.anchor(), rest_points, anchor_points);
  if (!pairs) return kInfiniteCost;
  return instance.costs.shift_table(voter)(*pairs);
}

std::optional<PreferenceOrder> realize(const ProblemInstance& instance, int voter,
                                       Points rest_points, Points anchor_points) {
  const PreferenceOrder& order = instance.election.order(voter);
  const int m = instance.election.num_parties();
  const PartyId anchor = instance.anchor();
  const CoalitionMask mask = instance.coalition_mask();

  if (instance.costs.type() == BriberyType::Shift) {
    ShiftLayout layout = make_layout(order, mask, anchor);
    auto choice = best_shift(layout, rest_points, anchor_points);
    if (!choice) return std::nullopt;
    return build_shift_order(layout, *choice, anchor_points, anchor);
  }

  if (realized_points(instance, voter) == std::pair{rest_points, anchor_points}) return order;
  const int a = rest_size(instance);
  auto split = price_split(rest_points, anchor_points, m, a);
  if (!split) return std::nullopt;

  const int below = split->below;
  const int above = a - below;
  std::vector<Points> values;
  if (above > 0) {
    values = distinct_values_with_sum(above, anchor_points + 1, m - 1, rest_points - split->below_sum);
  }
  if (below > 0) {
    auto low = distinct_values_with_sum(below, 0, anchor_points - 1, split->below_sum);
    values.insert(values.end(), low.begin(), low.end());
  }

  std::vector<PartyId> ranking(m, -1);
  ranking[m - 1 - anchor_points] = anchor;
  std::size_t next = 0;
  for (PartyId p : order.ranking()) {
    if (mask[p] && p != anchor) ranking[m - 1 - values[next++]] = p;
  }
  std::size_t slot = 0;
  for (PartyId p : order.ranking()) {
    if (mask[p]) continue;
    while (ranking[slot] != -1) ++slot;
    ranking[slot] = p;
  }
  return PreferenceOrder(std::move(ranking));
}

std::vector<VoterOption> voter_options(const ProblemInstance& instance, int voter) {
  const int m = instance.election.num_parties();
  const Points max_rest = Points{rest_size(instance)} * (m - 1);
  const bool shift = instance.costs.type() == BriberyType::Shift;
  std::vector<VoterOption> out;
  for (Points k1 = 0; k1 <= m - 1; ++k1) {
    for (Points kr = 0; kr <= max_rest; ++kr) {
      Cost c = shift ? h_shift(instance, voter, kr, k1) : h_price(instance, voter, kr, k1);
      if (c < kInfiniteCost) out.push_back({kr, k1, c});
    }
  }
  return out;
}

BordaDpTable::BordaDpTable(int num_voters, Points max_coalition, Points max_anchor)
    : max_coalition_(max_coalition), max_anchor_(max_anchor) {
  const std::size_t cells = static_cast<std::size_t>(max_coalition + 1) * (max_anchor + 1);
  cost_.assign(num_voters, std::vector<Cost>(cells, kInfiniteCost));
  choice_.assign(num_voters, std::vector<int>(cells, -1));
}

Cost BordaDpTable::at(int row, Points coalition_points, Points anchor_points) const {
  if (coalition_points < 0 || coalition_points > max_coalition_ || anchor_points < 0 ||
      anchor_points > max_anchor_) {
    return kInfiniteCost;
  }
  return cost_.at(row)[index(coalition_points, anchor_points)];
}

Cost& BordaDpTable::cell(int row, Points coalition_points, Points anchor_points) {
  return cost_.at(row).at(index(coalition_points, anchor_points));
}

int& BordaDpTable::choice(int row, Points coalition_points, Points anchor_points) {
  return choice_.at(row).at(index(coalition_points, anchor_points));
}

int BordaDpTable::choice_at(int row, Points coalition_points, Points anchor_points) const {
  return choice_.at(row).at(index(coalition_points, anchor_points));
}

std::uint64_t BordaDpTable::cell_count() const {
  std::uint64_t total = 0;
  for (const auto& row : cost_) total += row.size();
  return total;
}

BordaDp compute_borda_f(const ProblemInstance& instance) {
  instance.validate();
  require_borda0(instance);
  const int n = instance.election.num_voters();
  const int m = instance.election.num_parties();
  const int size = static_cast<int>(instance.coalition.size());
  Points per_voter = 0;
  for (int j = 0; j < size; ++j) per_voter += m - 1 - j;

  BordaDp dp{{}, BordaDpTable(n, n * per_voter, Points{n} * (m - 1))};
  dp.options.resize(n);
  for (int i = 0; i < n; ++i) dp.options[i] = voter_options(instance, i);

  auto& table = dp.table;
  for (int k = 0; k < static_cast<int>(dp.options[0].size()); ++k) {
    const VoterOption& o = dp.options[0][k];
    Cost& c = table.cell(0, o.rest_points + o.anchor_points, o.anchor_points);
    if (o.cost < c) {
      c = o.cost;
      table.choice(0, o.rest_points + o.anchor_points, o.anchor_points) = k;
    }
  }
  for (int i = 1; i < n; ++i) {
    const Points prev_coalition = i * per_voter;
    const Points prev_anchor = Points{i} * (m - 1);
    for (Points ka = 0; ka <= prev_coalition; ++ka) {
      for (Points k1 = 0; k1 <= std::min(ka, prev_anchor); ++k1) {
        Cost base = table.at(i - 1, ka, k1);
        if (base >= kInfiniteCost) continue;
        for (int k = 0; k < static_cast<int>(dp.options[i].size()); ++k) {
          const VoterOption& o = dp.options[i][k];
          Points na = ka + o.rest_points + o.anchor_points;
          Points n1 = k1 + o.anchor_points;
          Cost& c = table.cell(i, na, n1);
          if (base + o.cost < c) {
            c = base + o.cost;
            table.choice(i, na, n1) = k;
          }
        }
      }
    }
  }
  return dp;
}

SolveResult solve_borda_0(const ProblemInstance& instance) {
  BordaDp dp = compute_borda_f(instance);
  const int n = instance.election.num_voters();
  const int m = instance.election.num_parties();
  const Points total = grand_total(n, m, ScoringRule::Borda);
  const GoalChecker goals(instance);
  const BordaDpTable& table = dp.table;

  SolveResult result;
  result.work = table.cell_count();
  Points best_ka = -1;
  Points best_k1 = -1;
  for (Points k1 = table.max_anchor(); k1 >= 0; --k1) {
    for (Points ka = table.max_coalition(); ka >= k1; --ka) {
      Cost c = table.at(n - 1, ka, k1);
      if (c >= kInfiniteCost) continue;
      if (result.optimal_cost && c >= *result.optimal_cost) continue;
      if (!goals.holds(ka, k1, total)) continue;
      result.optimal_cost = c;
      best_ka = ka;
      best_k1 = k1;
    }
  }
  if (!result.optimal_cost) return result;

  BribePlan plan;
  Points ka = best_ka;
  Points k1 = best_k1;
  for (int i = n - 1; i >= 0; --i) {
    const VoterOption& o = dp.options[i][table.choice_at(i, ka, k1)];
    auto order = realize(instance, i, o.rest_points, o.anchor_points);
    if (!order) throw std::logic_error("finite option without a realizing order");
    if (!(*order == instance.election.order(i))) plan.replacements.emplace(i, std::move(*order));
    ka -= o.rest_points + o.anchor_points;
    k1 -= o.anchor_points;
  }
  auto cost = plan_cost(instance.costs, instance.coalition_mask(), instance.election, plan);
  if (!cost || *cost != *result.optimal_cost) {
    throw std::logic_error("reconstructed Borda bribe does not match the table cost");
  }
  plan.total_cost = *cost;
  result.plan = std::move(plan);
  result.feasible = *result.optimal_cost <= instance.budget;
  return result;
}

}  // namespace coalbribe::borda
