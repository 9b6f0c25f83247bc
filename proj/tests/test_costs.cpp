#include "doctest.h"

#include <random>

#include "coalbribe/costs.hpp"
#include "support.hpp"

using namespace coalbribe;
using testing::ord;

TEST_CASE("inverted pairs") {
  CHECK(inverted_pairs(ord({0, 1, 2}), ord({0, 1, 2})).empty());
  auto pairs = inverted_pairs(ord({0, 1, 2}), ord({2, 0, 1}));
  std::sort(pairs.begin(), pairs.end());
  CHECK(pairs == std::vector<std::pair<PartyId, PartyId>>{{0, 2}, {1, 2}});
  CHECK(inverted_pairs(ord({0, 1}), ord({1, 0})) ==
        std::vector<std::pair<PartyId, PartyId>>{{0, 1}});
  CHECK_THROWS_AS(inverted_pairs(ord({0, 1}), ord({0, 1, 2})), std::domain_error);
}

TEST_CASE("shift admissibility") {
  CostModel shift = CostModel::shift({ShiftTable::multiplicative(1, 3)});
  // c3 > c1 > c2 to c1 > c3 > c2 with A = {c1}.
  CHECK(admissible(shift, make_mask(std::vector<PartyId>{0}, 3), ord({2, 0, 1}), ord({0, 2, 1})));
  CHECK(admissible(shift, make_mask(std::vector<PartyId>{1}, 3), ord({2, 0, 1}), ord({2, 0, 1})));
  CHECK_FALSE(admissible(CostModel::shift({ShiftTable::multiplicative(1, 2)}),
                         make_mask(std::vector<PartyId>{0}, 2), ord({0, 1}), ord({1, 0})));
  // Members may trade places with each other.
  CHECK(admissible(shift, make_mask(std::vector<PartyId>{0, 1}, 3), ord({0, 1, 2}), ord({1, 0, 2})));
  // Non-members keep their relative order.
  CHECK_FALSE(admissible(shift, make_mask(std::vector<PartyId>{0}, 3), ord({0, 1, 2}),
                         ord({0, 2, 1})));
  CHECK(admissible(CostModel::unit(1), make_mask(std::vector<PartyId>{0}, 3), ord({0, 1, 2}),
                   ord({2, 1, 0})));
}

TEST_CASE("bribe prices per model") {
  CoalitionMask mask = make_mask(std::vector<PartyId>{0, 1}, 3);
  ShiftTable ex2 = ShiftTable::from_values({0, 1, 5, 9});
  CostModel shift = CostModel::shift({ex2});
  CHECK(bribe_cost(shift, mask, 0, ord({2, 0, 1}), ord({0, 2, 1})) == 1);
  CHECK(bribe_cost(shift, mask, 0, ord({2, 0, 1}), ord({0, 1, 2})) == 5);
  CHECK_FALSE(bribe_cost(shift, mask, 0, ord({0, 1, 2}), ord({2, 1, 0})).has_value());

  CostModel dollar = CostModel::dollar({2});
  CHECK(bribe_cost(dollar, mask, 0, ord({2, 0, 1}), ord({1, 0, 2})) == 2);
  CHECK(bribe_cost(dollar, mask, 0, ord({2, 0, 1}), ord({2, 0, 1})) == 0);
  CHECK(bribe_cost(CostModel::unit(1), mask, 0, ord({2, 0, 1}), ord({0, 2, 1})) == 1);

  SwapPrices sw = testing::uniform_swap(3, 0);
  sw[0][2] = 4;
  sw[1][2] = 3;
  CostModel swap = CostModel::swap({sw});
  CHECK(bribe_cost(swap, mask, 0, ord({0, 1, 2}), ord({2, 0, 1})) == 7);
  CHECK(bribe_cost(swap, mask, 0, ord({0, 1, 2}), ord({0, 1, 2})) == 0);
}

TEST_CASE("plan prices") {
  // X = 0 (35 voters, $1), Y = 1 (15, $1), Z = 2 (50, $2).
  std::vector<PreferenceOrder> orders;
  testing::repeat(orders, ord({0, 1, 2}), 35);
  testing::repeat(orders, ord({1, 0, 2}), 15);
  testing::repeat(orders, ord({2, 1, 0}), 50);
  Election e = testing::make_named_election({"X", "Y", "Z"}, orders);
  std::vector<Cost> prices(100, 1);
  for (int i = 50; i < 100; ++i) prices[i] = 2;
  CostModel dollar = CostModel::dollar(prices);
  CoalitionMask mask = make_mask(std::vector<PartyId>{0, 1}, 3);

  BribePlan plan;
  for (int i : {0, 1, 2, 50, 51}) plan.replacements.emplace(i, ord({1, 0, 2}));
  CHECK(plan_cost(dollar, mask, e, plan) == 7);
  CHECK(plan_cost(dollar, mask, e, BribePlan{}) == 0);

  std::vector<PreferenceOrder> ex;
  testing::repeat(ex, ord({0, 1, 2}), 5);
  ex.push_back(ord({1, 2, 0}));
  testing::repeat(ex, ord({2, 0, 1}), 10);
  Election two = testing::make_election(3, ex);
  std::vector<ShiftTable> tables(16, ShiftTable::multiplicative(5, 3));
  for (int i : {0, 6, 7}) tables[i] = ShiftTable::from_values({0, 1, 5, 9});
  CostModel shift = CostModel::shift(tables);
  BribePlan shifts;
  shifts.replacements.emplace(0, ord({1, 0, 2}));
  shifts.replacements.emplace(6, ord({0, 2, 1}));
  shifts.replacements.emplace(7, ord({0, 2, 1}));
  CHECK(plan_cost(shift, mask, two, shifts) == 3);
  auto after = shifts.apply(two);
  CHECK(after[0] == ord({1, 0, 2}));
  CHECK(after[1] == ord({0, 1, 2}));
}

TEST_CASE("shift tables") {
  CHECK_THROWS_AS(ShiftTable::from_values({1, 2}), std::domain_error);
  CHECK_THROWS_AS(ShiftTable::from_values({0, 3, 2}), std::domain_error);
  CHECK(ShiftTable::from_values({0, 2, 4, 6}).slope() == 2);
  CHECK_FALSE(ShiftTable::from_values({0, 1, 5}).slope().has_value());
  ShiftTable lin = ShiftTable::multiplicative(3, 4);
  CHECK(lin.values().size() == 7);
  CHECK(lin(6) == 18);
}

TEST_CASE("property: identity, swap decomposition, unit equivalence, shift monotonicity") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 400; ++trial) {
    int m = 2 + static_cast<int>(rng() % 4);
    std::vector<PartyId> a(m), b(m);
    std::iota(a.begin(), a.end(), 0);
    std::iota(b.begin(), b.end(), 0);
    std::shuffle(a.begin(), a.end(), rng);
    std::shuffle(b.begin(), b.end(), rng);
    PreferenceOrder before(a), after(b);
    CoalitionMask mask(m);
    for (int j = 0; j < m; ++j) mask[j] = rng() % 2;

    SwapPrices sw(m, std::vector<Cost>(m));
    for (auto& row : sw) for (auto& c : row) c = static_cast<Cost>(rng() % 4);
    CostModel swap = CostModel::swap({sw});
    CostModel unit = CostModel::unit(1);
    CostModel ones = CostModel::dollar({1});
    ShiftTable table = ShiftTable::multiplicative(1 + static_cast<Cost>(rng() % 3), m);
    CostModel shift = CostModel::shift({table});

    for (const CostModel* model : {&swap, &unit, &ones, &shift}) {
      CHECK(bribe_cost(*model, mask, 0, before, before) == 0);
    }
    CHECK(inverted_pairs(before, before).empty());

    Cost expected = 0;
    for (auto [x, y] : inverted_pairs(before, after)) expected += sw[x][y];
    CHECK(bribe_cost(swap, mask, 0, before, after) == expected);
    CHECK(count_inverted_pairs(before, after) == testing::crossed_pairs(before, after));
    CHECK(bribe_cost(unit, mask, 0, before, after) == bribe_cost(ones, mask, 0, before, after));

    bool allowed = testing::shift_allowed(mask, before, after);
    auto shift_cost = bribe_cost(shift, mask, 0, before, after);
    CHECK(shift_cost.has_value() == allowed);
    if (allowed) CHECK(*shift_cost == table(testing::crossed_pairs(before, after)));

    // Lifting a member past one more party it started below never lowers the price.
    for (int pos = 2; pos <= m; ++pos) {
      PartyId p = after.at(pos);
      PartyId over = after.at(pos - 1);
      if (!mask[p] || !allowed || before.position(over) > before.position(p)) continue;
      std::vector<PartyId> lifted = after.ranking();
      std::swap(lifted[pos - 1], lifted[pos - 2]);
      auto higher = bribe_cost(shift, mask, 0, before, PreferenceOrder(lifted));
      if (higher) CHECK(*higher >= *shift_cost);
    }
  }
}
