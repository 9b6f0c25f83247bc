#include "doctest.h"

#include <random>

#include "brute.hpp"
#include "coalbribe/plurality_dp.hpp"
#include "fixtures.hpp"

using namespace coalbribe;
using namespace coalbribe::plurality_dp;
using testing::ord;

namespace {

PartySupport support_with_prices(std::vector<Cost> prices) {
  std::vector<int> voters(prices.size());
  std::iota(voters.begin(), voters.end(), 0);
  return make_support(0, voters, prices);
}

// Every bribed subset of one party's supporters, tallied directly.
Cost brute_f_single(const std::vector<Cost>& prices, Points bound, int bribed, int active) {
  const int size = static_cast<int>(prices.size());
  Cost best = kInfiniteCost;
  for (int mask = 0; mask < (1 << size); ++mask) {
    if (__builtin_popcount(mask) != bribed) continue;
    Cost c = 0;
    for (int k = 0; k < size; ++k) if (mask >> k & 1) c += prices[k];
    int left = size - bribed;
    int a = left >= bound ? left : 0;
    if (a == active) best = std::min(best, c);
  }
  return best;
}

void check_witness(const ProblemInstance& inst, const SolveResult& r) {
  REQUIRE(r.optimal_cost.has_value());
  auto cost = plan_cost(inst.costs, inst.coalition_mask(), inst.election, r.plan);
  REQUIRE(cost.has_value());
  CHECK(*cost == *r.optimal_cost);
  CHECK(r.plan.total_cost == *cost);
  auto after = r.plan.apply(inst.election);
  CHECK(check_goals(after, inst));
}

}  // namespace

TEST_CASE("mincost sums the cheapest supporters") {
  PartySupport s = support_with_prices({3, 1, 2});
  CHECK(mincost(s, 2) == 3);
  CHECK(mincost(s, 4) == kInfiniteCost);
  CHECK(mincost(s, 0) == 0);
  PartySupport z = support_with_prices(std::vector<Cost>(50, 2));
  CHECK(mincost(z, 2) == 4);
}

TEST_CASE("f singleton cases") {
  PartySupport s = support_with_prices({1, 1, 1});
  auto layers = compute_f_layers(std::span(&s, 1), 3, 2);
  const FTable& f = layers.back();
  CHECK(f.at(1, 2) == 1);
  CHECK(f.at(0, 3) == 0);
  CHECK(f.at(2, 1) == kInfiniteCost);
  for (int l = 0; l <= 3; ++l) {
    for (int a = 0; a <= 3; ++a) CHECK(f.at(l, a) == brute_f_single({1, 1, 1}, 2, l, a));
  }
}

TEST_CASE("h singleton cases") {
  PartySupport one = support_with_prices({5});
  auto layers = compute_h_layers(std::span(&one, 1), 3, 2);
  const HTable& h = layers.back();
  CHECK(h.at(0, 1, 2) == 0);
  CHECK(h.at(0, 0, 0) == 0);
  CHECK(h.at(1, 0, 0) == 5);
  CHECK(h.at(0, 0, 1) == kInfiniteCost);
}

TEST_CASE("g on the three-party example") {
  ProblemInstance inst = testing::xyz_instance(testing::xyz_prices(35, 15, 50, 1, 1, 2), 0,
                                               Rational(1, 2), Rational(61, 100), 7);
  DpTables t = build_tables(inst);
  CHECK(t.bound == 20);
  CHECK(compute_g(t.f_layers.front(), t.h_layers.front(), 0, 0, 0, 0) == 0);
  CHECK(t.g(0, 0, 0, 0) == kInfiniteCost);
  CHECK(t.g(5, 45, 5, 20) == 10);
  CHECK(t.g(0, 51, 0, 0) == kInfiniteCost);
}

TEST_CASE("solver on the three-party example") {
  SUBCASE("CBP under $-bribery costs 7") {
    ProblemInstance inst = testing::xyz_instance(testing::xyz_prices(35, 15, 50, 1, 1, 2), 0,
                                                 Rational(1, 2), Rational(61, 100), 7);
    SolveResult r = solve_plurality_t_dollar(inst);
    CHECK(r.feasible);
    CHECK(r.optimal_cost == 7);
    check_witness(inst, r);
    auto t = tallies(r.plan.apply(inst.election), 3, ScoringRule::Plurality);
    CHECK(t == std::vector<Points>{32, 20, 48});
  }
  SUBCASE("CB under 1-bribery moves five Z voters to Y") {
    ProblemInstance inst = testing::xyz_instance(CostModel::unit(100), std::nullopt,
                                                 Rational(1, 2), 0, 5);
    SolveResult r = solve_plurality_t_dollar(inst);
    CHECK(r.feasible);
    CHECK(r.optimal_cost == 5);
    check_witness(inst, r);
    auto t = tallies(r.plan.apply(inst.election), 3, ScoringRule::Plurality);
    CHECK(t == std::vector<Points>{35, 20, 45});
    inst.budget = 4;
    CHECK_FALSE(solve_plurality_t_dollar(inst).feasible);
  }
  SUBCASE("goals already met need no bribe") {
    ProblemInstance inst = testing::xyz_instance(CostModel::unit(100), std::nullopt,
                                                 Rational(1, 3), 0, 0);
    SolveResult r = solve_plurality_t_dollar(inst);
    CHECK(r.feasible);
    CHECK(r.optimal_cost == 0);
    CHECK(r.plan.replacements.empty());
  }
}

TEST_CASE("solver rejects other rules and models") {
  ProblemInstance inst = testing::four_voter_instance(ScoringRule::Borda, 1);
  CHECK_THROWS_AS(solve_plurality_t_dollar(inst), std::invalid_argument);
  ProblemInstance swap = testing::four_voter_instance(ScoringRule::Plurality, 1);
  swap.costs = CostModel::swap(std::vector<SwapPrices>(4, testing::uniform_swap(4, 1)));
  CHECK_THROWS_AS(solve_plurality_t_dollar(swap), std::invalid_argument);
}

TEST_CASE("property: optimum matches brute force and witnesses verify") {
  std::mt19937_64 rng(2024);
  for (BriberyType type : {BriberyType::Unit, BriberyType::Dollar}) {
    for (bool cbp : {false, true}) {
      testing::RandomSpec spec{ScoringRule::Plurality, type, cbp, false, 6, 4, 3};
      for (int trial = 0; trial < 150; ++trial) {
        ProblemInstance inst = testing::random_instance(rng, spec);
        SolveResult r = solve_plurality_t_dollar(inst);
        auto expected = testing::brute_optimum(inst);
        CHECK(r.optimal_cost == expected);
        if (r.optimal_cost) check_witness(inst, r);
      }
    }
  }
}

TEST_CASE("property: CB equals CBP with zero ratio") {
  std::mt19937_64 rng(99);
  testing::RandomSpec spec{ScoringRule::Plurality, BriberyType::Dollar, false, false, 6, 4, 3};
  for (int trial = 0; trial < 100; ++trial) {
    ProblemInstance cb = testing::random_instance(rng, spec);
    ProblemInstance cbp = cb;
    cbp.preferred = cb.coalition.front();
    cbp.rho = 0;
    CHECK(solve_plurality_t_dollar(cb).optimal_cost == solve_plurality_t_dollar(cbp).optimal_cost);
  }
}

TEST_CASE("property: raising prices never lowers f or g") {
  std::mt19937_64 rng(7);
  testing::RandomSpec spec{ScoringRule::Plurality, BriberyType::Dollar, true, false, 6, 4, 3};
  for (int trial = 0; trial < 60; ++trial) {
    ProblemInstance cheap = testing::random_instance(rng, spec);
    const int n = cheap.election.num_voters();
    std::vector<Cost> prices(n);
    for (int i = 0; i < n; ++i) prices[i] = cheap.costs.price(i) + static_cast<Cost>(rng() % 3);
    ProblemInstance dear = cheap;
    dear.costs = CostModel::dollar(prices);
    DpTables a = build_tables(cheap);
    DpTables b = build_tables(dear);
    for (int l = 0; l <= n; ++l) {
      for (int x = 0; x <= n; ++x) {
        CHECK(a.f().at(l, x) <= b.f().at(l, x));
        for (int d = 0; d <= n; ++d) {
          for (int y = 0; y <= n; ++y) CHECK(a.g(l, x, d, y) <= b.g(l, x, d, y));
        }
      }
    }
  }
}
