#include "doctest.h"

#include <random>
#include <stdexcept>

#include "coalbribe/flow.hpp"
#include "source_checks.hpp"

using namespace coalbribe::flow;

namespace {

FlowNetwork two_nodes(std::int64_t demand) {
  FlowNetwork g;
  g.source = g.add_node();
  g.sink = g.add_node();
  g.demand = demand;
  return g;
}

}  // namespace

TEST_CASE("single edge") {
  FlowNetwork g = two_nodes(3);
  g.add_edge(g.source, g.sink, 5, 2);
  auto f = min_cost_flow(g);
  REQUIRE(f);
  CHECK(f->total_cost == 6);
  CHECK(f->edge_flow[0] == 3);
  CHECK(validate_flow(g, *f));
}

TEST_CASE("parallel edges prefer the cheap one") {
  FlowNetwork g = two_nodes(3);
  g.add_edge(g.source, g.sink, 1, 0);
  g.add_edge(g.source, g.sink, 5, 4);
  auto f = min_cost_flow(g);
  REQUIRE(f);
  CHECK(f->total_cost == 8);
}

TEST_CASE("disconnected demand is infeasible") {
  FlowNetwork g = two_nodes(1);
  int mid = g.add_node();
  g.add_edge(g.source, mid, 1, 0);
  CHECK_FALSE(min_cost_flow(g).has_value());
}

TEST_CASE("validate_flow") {
  FlowNetwork g = two_nodes(1);
  g.add_edge(g.source, g.sink, 1, 0);
  CHECK_FALSE(validate_flow(g, Flow{{2}, 0}));
  CHECK(validate_flow(g, Flow{{1}, 0}));
  FlowNetwork empty = two_nodes(0);
  empty.add_edge(empty.source, empty.sink, 3, 1);
  CHECK(validate_flow(empty, Flow{{0}, 0}));
}

TEST_CASE("malformed networks are rejected") {
  FlowNetwork g = two_nodes(1);
  g.add_edge(g.source, g.sink, -1, 0);
  CHECK_THROWS_AS(min_cost_flow(g), std::domain_error);
  FlowNetwork h = two_nodes(1);
  h.sink = h.source;
  CHECK_THROWS_AS(min_cost_flow(h), std::domain_error);
}

TEST_CASE("property: optimal against exhaustive enumeration") {
  std::mt19937_64 rng(11);
  int feasible = 0;
  for (int trial = 0; trial < 400; ++trial) {
    FlowNetwork g = testing::random_network(rng);
    auto f = min_cost_flow(g);
    auto expected = testing::exhaustive_flow_cost(g);
    CHECK(f.has_value() == expected.has_value());
    if (f && expected) {
      ++feasible;
      CHECK(validate_flow(g, *f));
      CHECK(f->total_cost == *expected);
      std::int64_t recomputed = 0;
      for (std::size_t j = 0; j < g.edges.size(); ++j) {
        recomputed += f->edge_flow[j] * g.edges[j].cost;
      }
      CHECK(recomputed == f->total_cost);
    }
  }
  CHECK(feasible > 50);
}
