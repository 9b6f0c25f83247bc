#pragma once

#include "support.hpp"

namespace testing {

/// Three-party Plurality election: X = 0, Y = 1, Z = 2.
inline Election xyz_election(int x, int y, int z) {
  std::vector<PreferenceOrder> orders;
  repeat(orders, ord({0, 1, 2}), x);
  repeat(orders, ord({1, 0, 2}), y);
  repeat(orders, ord({2, 1, 0}), z);
  return make_named_election({"X", "Y", "Z"}, std::move(orders));
}

/// Per-voter prices for xyz_election by supported party.
inline CostModel xyz_prices(int x, int y, int z, Cost px, Cost py, Cost pz) {
  std::vector<Cost> prices;
  prices.insert(prices.end(), x, px);
  prices.insert(prices.end(), y, py);
  prices.insert(prices.end(), z, pz);
  return CostModel::dollar(prices);
}

/// 35 X, 15 Y, 50 Z with coalition {X, Y} at threshold 1/5.
inline ProblemInstance xyz_instance(CostModel costs, std::optional<PartyId> preferred,
                                    Rational phi, Rational rho, Cost budget) {
  return make_instance(xyz_election(35, 15, 50), ScoringRule::Plurality, Rational(1, 5), {0, 1},
                       preferred, std::move(phi), std::move(rho), budget, std::move(costs));
}

/// Four identical voters c4 > c3 > c2 > c1, coalition {c1, c2}, phi 1/4.
inline ProblemInstance four_voter_instance(ScoringRule rule, Cost budget) {
  std::vector<PreferenceOrder> orders(4, ord({3, 2, 1, 0}));
  return make_instance(make_election(4, orders), rule, 0, {0, 1}, std::nullopt, Rational(1, 4), 0,
                       budget, CostModel::unit(4));
}

/// 16 voters over c1..c3: five c1 > c2 > c3, one c2 > c3 > c1, ten c3 > c1 > c2.
inline Election sixteen_voter_election() {
  std::vector<PreferenceOrder> orders;
  repeat(orders, ord({0, 1, 2}), 5);
  orders.push_back(ord({1, 2, 0}));
  repeat(orders, ord({2, 0, 1}), 10);
  return make_election(3, std::move(orders));
}

/// v1, v7 and v8 pay 1 for one crossed pair and 5 for two; everyone else 5 per pair.
inline CostModel sixteen_voter_shift_prices() {
  std::vector<ShiftTable> tables(16, ShiftTable::multiplicative(5, 3));
  for (int i : {0, 6, 7}) tables[i] = ShiftTable::from_values({0, 1, 5, 9});
  return CostModel::shift(tables);
}

inline ProblemInstance sixteen_voter_instance(CostModel costs, Cost budget) {
  return make_instance(sixteen_voter_election(), ScoringRule::Plurality, Rational(1, 8), {0, 1}, 0,
                       Rational(1, 2), Rational(3, 4), budget, std::move(costs));
}

}  // namespace testing
