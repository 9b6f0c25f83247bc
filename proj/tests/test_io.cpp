#include "doctest.h"

#include <random>

#include "brute.hpp"
#include "coalbribe/instance_io.hpp"
#include "fixtures.hpp"

using namespace coalbribe;
using namespace coalbribe::io;

namespace {

int error_line(std::string_view text) {
  try {
    parse_instance(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return -1;
}

const char* kMinimal = R"(parties X Y Z
rule plurality
coalition X
budget 1
voter a X Y Z
voter b Z Y X
)";

}  // namespace

TEST_CASE("parse a small instance") {
  ProblemInstance inst = parse_instance(kMinimal);
  CHECK(inst.election.num_parties() == 3);
  CHECK(inst.election.voters() == std::vector<std::string>{"a", "b"});
  CHECK(inst.election.order(1) == testing::ord({2, 1, 0}));
  CHECK(inst.threshold == 0);
  CHECK_FALSE(inst.is_cbp());
  CHECK(inst.costs.type() == BriberyType::Unit);

  ProblemInstance dollar = parse_instance(std::string(kMinimal) +
                                          "cost dollar\nprice * 3\nprice b 2  # override\n");
  CHECK(dollar.costs.price(0) == 3);
  CHECK(dollar.costs.price(1) == 2);

  ProblemInstance swap = parse_instance(std::string(kMinimal) +
                                        "cost swap\nswap a X Y 4\nswap-default * 2\n");
  CHECK(swap.costs.swap_prices(0)[0][1] == 4);
  CHECK(swap.costs.swap_prices(0)[1][0] == 2);
  CHECK(swap.costs.swap_prices(1)[0][1] == 2);
  CHECK(swap.costs.swap_prices(1)[1][1] == 0);

  ProblemInstance shift = parse_instance(std::string(kMinimal) +
                                         "cost shift\nshift * slope 2\nshift b table 0 1 5 9\n");
  CHECK(shift.costs.shift_table(0) == ShiftTable::multiplicative(2, 3));
  CHECK(shift.costs.shift_table(1).values() == std::vector<Cost>{0, 1, 5, 9});
}

TEST_CASE("the shorthand names voters by index") {
  ProblemInstance inst = parse_instance(
      "parties X Y\nrule borda\ncoalition Y\npreferred Y\nrho 1/2\nbudget 0\nvoters 2 X Y\n"
      "voter w Y X\n");
  CHECK(inst.election.voters() == std::vector<std::string>{"v1", "v2", "w"});
  CHECK(inst.preferred == 1);
  CHECK(inst.rho == Rational(1, 2));
}

TEST_CASE("errors carry the offending line") {
  CHECK(error_line("parties X Y Z\nrule plurality\ncoalition X\nbudget 1\nvoter a X Y X\n") == 5);
  CHECK(error_line("parties X Y\nrule plurality\ncoalition X\nbudget 1\nvoter a X\n") == 5);
  CHECK(error_line("parties X Y\nrule approval\n") == 2);
  CHECK(error_line("rule plurality\nparties X Y\ncoalition X Q\nbudget 1\nvoter a X Y\n") == 3);
  CHECK(error_line("parties X Y\nthreshold 1/0\n") == 2);
  CHECK(error_line("parties X Y\nbudget -4\n") == 2);
  CHECK(error_line("parties X X\n") == 1);
  CHECK(error_line("parties X Y\nfrobnicate\n") == 2);
  CHECK(error_line("parties X Y\nrule plurality\ncoalition X\nbudget 1\nvoter a X Y\nvoter a Y X\n") ==
        6);
  CHECK(error_line(std::string(kMinimal) + "cost unit\nprice a 2\n") == 8);
  CHECK(error_line(std::string(kMinimal) + "cost dollar\nprice q 2\n") == 8);
  CHECK(error_line(std::string(kMinimal) + "cost shift\nshift a table 0 1\n") == 8);
  CHECK(error_line(std::string(kMinimal) + "cost shift\nshift a table 0 3 2 4\n") == 8);
  CHECK(error_line(std::string(kMinimal) + "rho 1/2\n") == 7);
  CHECK(error_line("parties X Y\nrule plurality\ncoalition X\nvoter a X Y\n") == 5);
  CHECK(error_line("parties X Y\nrule plurality\ncoalition X\nbudget 2\n") == 5);
}

TEST_CASE("fixtures serialize canonically") {
  ProblemInstance inst = testing::xyz_instance(testing::xyz_prices(35, 15, 50, 1, 1, 2), 0,
                                               Rational(1, 2), Rational(61, 100), 7);
  std::string text = serialize_instance(inst);
  CHECK(text.rfind("parties X Y Z\nrule plurality\nthreshold 1/5\ncoalition X Y\npreferred X\n"
                   "phi 1/2\nrho 61/100\nbudget 7\ncost dollar\n",
                   0) == 0);
  ProblemInstance back = parse_instance(text);
  CHECK(serialize_instance(back) == text);
  CHECK(back.costs == inst.costs);
  CHECK(back.election.orders() == inst.election.orders());
}

TEST_CASE("property: parse after serialize is the identity") {
  std::mt19937_64 rng(17);
  for (ScoringRule rule : {ScoringRule::Plurality, ScoringRule::Borda}) {
    for (BriberyType type :
         {BriberyType::Unit, BriberyType::Dollar, BriberyType::Swap, BriberyType::Shift}) {
      for (bool cbp : {false, true}) {
        testing::RandomSpec spec{rule, type, cbp, (rng() % 2) == 1, 5, 5, 4};
        for (int trial = 0; trial < 30; ++trial) {
          ProblemInstance inst = testing::random_instance(rng, spec);
          std::string text = serialize_instance(inst);
          ProblemInstance back = parse_instance(text);
          CHECK(serialize_instance(back) == text);
          CHECK(back.election.parties() == inst.election.parties());
          CHECK(back.election.voters() == inst.election.voters());
          CHECK(back.election.orders() == inst.election.orders());
          CHECK(back.rule == inst.rule);
          CHECK(back.threshold == inst.threshold);
          CHECK(back.coalition == inst.coalition);
          CHECK(back.preferred == inst.preferred);
          CHECK(back.phi == inst.phi);
          CHECK(back.rho == inst.rho);
          CHECK(back.budget == inst.budget);
          CHECK_MESSAGE(back.costs == inst.costs, to_string(type));
        }
      }
    }
  }
}

TEST_CASE("reduction sources") {
  auto x = parse_exact_cover("elements 4\nsubset 1 2 3 4\nsubset 1 2 3 4\nsubset 4 3 2 1\n");
  CHECK(x.subsets[2] == std::vector<int>{3, 2, 1, 0});
  CHECK(parse_exact_cover(serialize_exact_cover(x)).subsets == x.subsets);
  CHECK_THROWS_AS(parse_exact_cover("elements 4\nsubset 1 2 3 5\n"), ParseError);
  CHECK_THROWS_AS(parse_exact_cover("elements 4\nsubset 1 2 3 4\n"), ParseError);

  auto g = parse_bisection("vertices 4\ncut 1\nedge 1 2\nedge 3 4\n");
  CHECK(g.num_vertices == 4);
  CHECK(g.max_cut == 1);
  CHECK(g.edges == std::vector<std::pair<int, int>>{{0, 1}, {2, 3}});
  CHECK(serialize_bisection(parse_bisection(serialize_bisection(g))) == serialize_bisection(g));
  CHECK_THROWS_AS(parse_bisection("vertices 3\n"), ParseError);
  CHECK_THROWS_AS(parse_bisection("vertices 2\nedge 1 3\n"), ParseError);
}
