#pragma once

#include <map>
#include <optional>
#include <vector>

#include "coalbribe/instance.hpp"
#include "support.hpp"

namespace testing {

/// Price of one replacement, computed without the library's cost routines.
inline std::optional<Cost> direct_price(const ProblemInstance& inst, int voter,
                                        const PreferenceOrder& before,
                                        const PreferenceOrder& after) {
  if (before == after) return 0;
  const CostModel& model = inst.costs;
  switch (model.type()) {
    case BriberyType::Unit:
      return 1;
    case BriberyType::Dollar:
      return model.price(voter);
    case BriberyType::Swap: {
      Cost total = 0;
      const auto& sw = model.swap_prices(voter);
      for (PartyId x = 0; x < before.size(); ++x) {
        for (PartyId y = 0; y < before.size(); ++y) {
          if (before.position(y) > before.position(x) && after.position(y) < after.position(x)) {
            total += sw[x][y];
          }
        }
      }
      return total;
    }
    case BriberyType::Shift:
      if (!shift_allowed(inst.coalition_mask(), before, after)) return std::nullopt;
      return model.shift_table(voter)(crossed_pairs(before, after));
  }
  return std::nullopt;
}

/// Per voter: cheapest price of each reachable score vector.
inline std::vector<std::vector<std::pair<std::vector<Points>, Cost>>> score_options(
    const ProblemInstance& inst) {
  const int m = inst.election.num_parties();
  const auto perms = all_orders(m);
  std::vector<std::vector<std::pair<std::vector<Points>, Cost>>> out;
  for (int i = 0; i < inst.election.num_voters(); ++i) {
    std::map<std::vector<Points>, Cost> best;
    for (const auto& o : perms) {
      auto c = direct_price(inst, i, inst.election.order(i), o);
      if (!c) continue;
      auto sv = score_vector(o, inst.rule);
      auto it = best.find(sv);
      if (it == best.end() || *c < it->second) best[sv] = *c;
    }
    out.emplace_back(best.begin(), best.end());
  }
  return out;
}

/// Least total price of any bribe meeting the goals, by full enumeration.
inline std::optional<Cost> brute_optimum(const ProblemInstance& inst) {
  const auto options = score_options(inst);
  const int n = inst.election.num_voters();
  const int m = inst.election.num_parties();
  GoalChecker goals(inst);
  std::optional<Cost> best;
  std::vector<Points> tally(m, 0);
  auto dfs = [&](auto&& self, int i, Cost spent) -> void {
    if (best && spent >= *best) return;
    if (i == n) {
      if (goals(tally) && (!best || spent < *best)) best = spent;
      return;
    }
    for (const auto& [sv, c] : options[i]) {
      for (int p = 0; p < m; ++p) tally[p] += sv[p];
      self(self, i + 1, spent + c);
      for (int p = 0; p < m; ++p) tally[p] -= sv[p];
    }
  };
  dfs(dfs, 0, 0);
  return best;
}

struct RandomSpec {
  ScoringRule rule = ScoringRule::Plurality;
  BriberyType type = BriberyType::Unit;
  bool cbp = false;
  bool zero_threshold = false;
  int max_voters = 5;
  int max_parties = 4;
  Cost max_price = 3;
};

template <class Rng>
ProblemInstance random_instance(Rng& rng, const RandomSpec& spec) {
  auto pick = [&](int lo, int hi) { return lo + static_cast<int>(rng() % (hi - lo + 1)); };
  const int m = pick(2, spec.max_parties);
  const int n = pick(1, spec.max_voters);
  std::vector<PreferenceOrder> orders;
  for (int i = 0; i < n; ++i) {
    std::vector<PartyId> perm(m);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    orders.emplace_back(perm);
  }
  std::vector<PartyId> parties(m);
  std::iota(parties.begin(), parties.end(), 0);
  std::shuffle(parties.begin(), parties.end(), rng);
  std::vector<PartyId> coalition(parties.begin(), parties.begin() + pick(1, m - 1));
  std::optional<PartyId> preferred;
  Rational rho = 0;
  if (spec.cbp) {
    preferred = coalition[rng() % coalition.size()];
    rho = Rational(pick(0, 4), 4);
  }
  Rational threshold = spec.zero_threshold ? Rational(0) : Rational(pick(0, 3), 8);
  Rational phi(pick(0, 6), 6);

  CostModel costs = CostModel::unit(n);
  switch (spec.type) {
    case BriberyType::Unit:
      break;
    case BriberyType::Dollar: {
      std::vector<Cost> prices(n);
      for (auto& p : prices) p = pick(0, static_cast<int>(spec.max_price));
      costs = CostModel::dollar(prices);
      break;
    }
    case BriberyType::Swap: {
      std::vector<SwapPrices> all(n, SwapPrices(m, std::vector<Cost>(m, 0)));
      for (auto& sw : all) {
        for (auto& row : sw) for (auto& c : row) c = pick(0, static_cast<int>(spec.max_price));
      }
      costs = CostModel::swap(all);
      break;
    }
    case BriberyType::Shift: {
      std::vector<ShiftTable> tables;
      for (int i = 0; i < n; ++i) {
        if (rng() % 2) {
          tables.push_back(ShiftTable::multiplicative(pick(0, static_cast<int>(spec.max_price)), m));
        } else {
          std::vector<Cost> values{0};
          for (int k = 1; k <= m * (m - 1) / 2; ++k) values.push_back(values.back() + pick(0, 2));
          tables.push_back(ShiftTable::from_values(values));
        }
      }
      costs = CostModel::shift(tables);
      break;
    }
  }
  return make_instance(make_election(m, std::move(orders)), spec.rule, threshold, coalition,
                       preferred, phi, rho, 0, std::move(costs));
}

}  // namespace testing
