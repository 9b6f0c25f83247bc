#include "coalbribe/reductions.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace coalbribe::reductions {
namespace {

std::vector<std::string> numbered(const std::string& prefix, int count, int first = 1) {
  std::vector<std::string> out;
  for (int k = 0; k < count; ++k) out.push_back(prefix + std::to_string(first + k));
  return out;
}

void append(std::vector<std::string>& out, std::vector<std::string> more) {
  out.insert(out.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
}

/// Parties in `lifted` first, then the rest; both groups keep their order.
PreferenceOrder lift_block(const PreferenceOrder& order, const std::vector<bool>& lifted) {
  std::vector<PartyId> front, back;
  for (PartyId p : order.ranking()) (lifted[p] ? front : back).push_back(p);
  front.insert(front.end(), back.begin(), back.end());
  return PreferenceOrder(std::move(front));
}

void price_plan(const ProblemInstance& instance, BribePlan& plan) {
  auto cost = plan_cost(instance.costs, instance.coalition_mask(), instance.election, plan);
  plan.total_cost = cost.value_or(kInfiniteCost);
}

void set_pair(SwapPrices& sw, PartyId a, PartyId b, Cost price) {
  sw[a][b] = price;
  sw[b][a] = price;
}

}  // namespace

void ExactCover34Instance::validate() const {
  if (num_elements <= 0 || num_elements % 4 != 0) {
    throw std::domain_error("element count must be a positive multiple of 4");
  }
  if (static_cast<int>(subsets.size()) != 3 * num_elements / 4) {
    throw std::domain_error("expected " + std::to_string(3 * num_elements / 4) + " subsets");
  }
  std::vector<int> occurrences(num_elements, 0);
  for (const auto& s : subsets) {
    if (s.size() != 4) throw std::domain_error("every subset needs exactly 4 elements");
    std::set<int> distinct(s.begin(), s.end());
    if (distinct.size() != 4) throw std::domain_error("subset repeats an element");
    for (int e : s) {
      if (e < 0 || e >= num_elements) throw std::domain_error("element out of range");
      ++occurrences[e];
    }
  }
  for (int e = 0; e < num_elements; ++e) {
    if (occurrences[e] != 3) {
      throw std::domain_error("element " + std::to_string(e + 1) + " lies in " +
                              std::to_string(occurrences[e]) + " subsets, not 3");
    }
  }
}

void MinBisectionInstance::validate() const {
  if (num_vertices <= 0 || num_vertices % 2 != 0) {
    throw std::domain_error("vertex count must be positive and even");
  }
  if (max_cut < 0) throw std::domain_error("cut bound must be non-negative");
  std::set<std::pair<int, int>> seen;
  for (auto [a, b] : edges) {
    if (a < 0 || b < 0 || a >= num_vertices || b >= num_vertices) {
      throw std::domain_error("edge endpoint out of range");
    }
    if (a == b) throw std::domain_error("self-loop");
    if (!seen.insert(std::minmax(a, b)).second) throw std::domain_error("duplicate edge");
  }
}

ProblemInstance reduce_x3c_to_plurality_shift_cb(const ExactCover34Instance& source) {
  source.validate();
  const int n = source.num_elements;
  const int m = static_cast<int>(source.subsets.size());
  const PartyId lead = m;
  const int fillers = 3 * n;
  const int num_parties = m + fillers + 1;

  std::vector<std::string> parties = numbered("d", m);
  parties.push_back("lead");
  append(parties, numbered("f", fillers));

  std::vector<std::vector<PartyId>> containing(n);
  for (int j = 0; j < m; ++j) {
    for (int e : source.subsets[j]) containing[e].push_back(j);
  }

  std::vector<PreferenceOrder> orders;
  for (int i = 0; i < 2 * n; ++i) {
    std::vector<PartyId> ranking{lead};
    std::vector<bool> placed(num_parties, false);
    placed[lead] = true;
    if (i < n) {
      for (PartyId j : containing[i]) {
        ranking.push_back(j);
        placed[j] = true;
      }
    }
    for (PartyId f = m + 1; f < num_parties; ++f) {
      ranking.push_back(f);
      placed[f] = true;
    }
    for (PartyId j = 0; j < m; ++j) {
      if (!placed[j]) ranking.push_back(j);
    }
    orders.emplace_back(std::move(ranking));
  }

  std::vector<PartyId> coalition(m);
  for (int j = 0; j < m; ++j) coalition[j] = j;
  std::vector<ShiftTable> tables(2 * n, ShiftTable::multiplicative(1, num_parties));

  ProblemInstance out{Election(std::move(parties), numbered("v", 2 * n), std::move(orders)),
                      ScoringRule::Plurality,
                      Rational(2, n),
                      std::move(coalition),
                      std::nullopt,
                      Rational(1, 2),
                      Rational(0),
                      3 * static_cast<Cost>(n),
                      CostModel::shift(std::move(tables))};
  out.validate();
  return out;
}

ProblemInstance reduce_x3c_to_borda_unit_cb(const ExactCover34Instance& source) {
  source.validate();
  const std::int64_t n = source.num_elements;
  const std::int64_t m = static_cast<std::int64_t>(source.subsets.size());
  const int members = static_cast<int>(m * n + 1);
  const int num_parties = members + static_cast<int>(n);
  auto element_party = [&](int e) { return static_cast<PartyId>(members + e); };

  std::vector<std::string> parties = numbered("a", members);
  append(parties, numbered("u", static_cast<int>(n)));

  std::vector<PreferenceOrder> forward, mirrored;
  for (const auto& subset : source.subsets) {
    std::vector<int> inside(subset.begin(), subset.end());
    std::sort(inside.begin(), inside.end());
    std::vector<int> outside;
    for (int e = 0; e < n; ++e) {
      if (std::find(inside.begin(), inside.end(), e) == inside.end()) outside.push_back(e);
    }

    std::vector<PartyId> ranking;
    for (int e : inside) ranking.push_back(element_party(e));
    for (PartyId a = 0; a < members; ++a) ranking.push_back(a);
    for (int e : outside) ranking.push_back(element_party(e));
    forward.emplace_back(std::move(ranking));

    std::vector<PartyId> reversed;
    for (PartyId a = members - 1; a >= 0; --a) reversed.push_back(a);
    for (auto it = outside.rbegin(); it != outside.rend(); ++it) {
      reversed.push_back(element_party(*it));
    }
    for (auto it = inside.rbegin(); it != inside.rend(); ++it) {
      reversed.push_back(element_party(*it));
    }
    mirrored.emplace_back(std::move(reversed));
  }

  std::vector<std::string> voters = numbered("v", static_cast<int>(m));
  for (int i = 1; i <= m; ++i) voters.push_back("v" + std::to_string(i) + "r");
  std::vector<PreferenceOrder> orders = std::move(forward);
  orders.insert(orders.end(), mirrored.begin(), mirrored.end());

  std::vector<PartyId> coalition(members);
  for (int a = 0; a < members; ++a) coalition[a] = a;

  // Activity bound in points; the fraction below makes ceil(t * total) equal it.
  const std::int64_t bound = n * n + 2 * m * n + 2;
  const Points total = grand_total(static_cast<int>(2 * m), num_parties, ScoringRule::Borda);

  ProblemInstance out{Election(std::move(parties), std::move(voters), std::move(orders)),
                      ScoringRule::Borda,
                      Rational(bound, total),
                      std::move(coalition),
                      std::nullopt,
                      Rational(1),
                      Rational(0),
                      n / 4,
                      CostModel::unit(static_cast<int>(2 * m))};
  out.validate();
  return out;
}

ProblemInstance reduce_minbisection_to_borda_swap_cb(const MinBisectionInstance& source) {
  source.validate();
  const int vertices = source.num_vertices;
  const Cost half = vertices / 2;
  const Cost k = source.max_cut;
  const int num_parties = 2 * vertices + 1;
  const PartyId outside = 2 * vertices;
  auto first_copy = [](int v) { return static_cast<PartyId>(v); };
  auto second_copy = [vertices](int v) { return static_cast<PartyId>(vertices + v); };

  const Cost budget = half * (k + half) * (k + half) + half * k * half + k;

  SwapPrices sw(num_parties, std::vector<Cost>(num_parties, 0));
  for (int v = 0; v < vertices; ++v) {
    set_pair(sw, first_copy(v), outside, (k + half) * (k + half));
    set_pair(sw, second_copy(v), outside, k * half);
    set_pair(sw, second_copy(v), first_copy(v), budget + 1);
  }
  for (auto [a, b] : source.edges) {
    set_pair(sw, second_copy(a), first_copy(b), 1);
    set_pair(sw, second_copy(b), first_copy(a), 1);
  }

  std::vector<std::string> parties = numbered("a", vertices);
  append(parties, numbered("b", vertices));
  parties.push_back("x");

  std::vector<PartyId> ranking{outside};
  for (PartyId p = 0; p < outside; ++p) ranking.push_back(p);
  std::vector<PartyId> coalition(outside);
  for (PartyId p = 0; p < outside; ++p) coalition[p] = p;

  ProblemInstance out{
      Election(std::move(parties), {"v1"}, {PreferenceOrder(std::move(ranking))}),
      ScoringRule::Borda,
      Rational(0),
      std::move(coalition),
      std::nullopt,
      Rational(2 * vertices, 2 * vertices + 1),
      Rational(0),
      budget,
      CostModel::swap({std::move(sw)})};
  out.validate();
  return out;
}

ProblemInstance shift_to_swap(const ProblemInstance& instance) {
  if (instance.costs.type() != BriberyType::Shift) {
    throw std::domain_error("shift_to_swap needs a shift cost model");
  }
  const int m = instance.election.num_parties();
  const CoalitionMask mask = instance.coalition_mask();
  std::vector<SwapPrices> prices;
  for (int v = 0; v < instance.election.num_voters(); ++v) {
    auto slope = instance.costs.shift_table(v).slope();
    if (!slope) {
      throw std::domain_error("voter " + instance.election.voters()[v] +
                              " has a non-multiplicative shift table");
    }
    SwapPrices sw(m, std::vector<Cost>(m, 0));
    for (PartyId x = 0; x < m; ++x) {
      for (PartyId y = 0; y < m; ++y) {
        if (x != y) sw[x][y] = mask[y] ? *slope : instance.budget + 1;
      }
    }
    prices.push_back(std::move(sw));
  }
  ProblemInstance out = instance;
  out.costs = CostModel::swap(std::move(prices));
  return out;
}

BribePlan map_cover_to_bribe(std::span<const int> cover, const ProblemInstance& reduced,
                             Construction construction) {
  const std::set<int> chosen(cover.begin(), cover.end());
  BribePlan plan;
  switch (construction) {
    case Construction::PluralityShift: {
      // Element voters list the subsets holding their element at ranks 2..4.
      const int elements = reduced.election.num_voters() / 2;
      for (int v = 0; v < elements; ++v) {
        const PreferenceOrder& order = reduced.election.order(v);
        for (int rank = 2; rank <= 4; ++rank) {
          if (chosen.count(order.at(rank))) {
            plan.replacements.emplace(v, order.lifted_to_top(order.at(rank)));
            break;
          }
        }
      }
      break;
    }
    case Construction::BordaUnit: {
      const CoalitionMask mask = reduced.coalition_mask();
      const int subsets = reduced.election.num_voters() / 2;
      for (int j : chosen) {
        if (j < 0 || j >= subsets) continue;
        plan.replacements.emplace(j, lift_block(reduced.election.order(j), mask));
      }
      break;
    }
  }
  price_plan(reduced, plan);
  return plan;
}

BribePlan map_bisection_to_bribe(std::span<const int> side, const ProblemInstance& reduced) {
  const int m = reduced.election.num_parties();
  const int vertices = (m - 1) / 2;
  std::vector<bool> lifted(m, false);
  for (int v : side) {
    if (v < 0 || v >= vertices) throw std::domain_error("vertex out of range");
    lifted[v] = true;
    lifted[vertices + v] = true;
  }
  BribePlan plan;
  plan.replacements.emplace(0, lift_block(reduced.election.order(0), lifted));
  price_plan(reduced, plan);
  return plan;
}

bool verify_bribe(const ProblemInstance& instance, const BribePlan& plan) {
  auto cost = plan_cost(instance.costs, instance.coalition_mask(), instance.election, plan);
  if (!cost || *cost > instance.budget) return false;
  return check_goals(plan.apply(instance.election), instance);
}

}  // namespace coalbribe::reductions
