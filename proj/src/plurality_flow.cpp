#include "coalbribe/plurality_flow.hpp"

#include <stdexcept>

namespace coalbribe::plurality_flow {

namespace {

TopClass class_of(const ProblemInstance& instance, const CoalitionMask& mask, PartyId p) {
  if (p == instance.anchor()) return TopClass::Anchor;
  return mask[p] ? TopClass::Rest : TopClass::Outside;
}

}  // namespace

std::optional<TopBribe> min_bribe_to_top(const ProblemInstance& instance, int voter, TopClass cls) {
  const BriberyType type = instance.costs.type();
  if (type != BriberyType::Swap && type != BriberyType::Shift) {
    throw std::invalid_argument("top-class bribes are defined for swap and shift bribery");
  }
  const CoalitionMask mask = instance.coalition_mask();
  const PreferenceOrder& order = instance.election.order(voter);
  if (class_of(instance, mask, order.top()) == cls) return TopBribe{order, 0, false};

  std::optional<TopBribe> best;
  for (int pos = 2; pos <= order.size(); ++pos) {
    PartyId p = order.at(pos);
    if (class_of(instance, mask, p) != cls) continue;
    Cost cost = 0;
    if (type == BriberyType::Swap) {
      const auto& sw = instance.costs.swap_prices(voter);
      for (int above = 1; above < pos; ++above) cost += sw[order.at(above)][p];
    } else {
      // Only coalition members may be lifted; every party above is crossed.
      if (!mask[p]) continue;
      cost = instance.costs.shift_table(voter)(pos - 1);
    }
    if (!best || cost < best->cost) best = TopBribe{order.lifted_to_top(p), cost, true};
  }
  return best;
}

TopClassBribes compute_top_class_bribes(const ProblemInstance& instance) {
  TopClassBribes out(instance.election.num_voters());
  for (int i = 0; i < instance.election.num_voters(); ++i) {
    for (int c = 0; c < 3; ++c) out[i][c] = min_bribe_to_top(instance, i, static_cast<TopClass>(c));
  }
  return out;
}

SplitNetwork build_mcf_instance(int k_anchor, int k_rest, const TopClassBribes& bribes) {
  const int n = static_cast<int>(bribes.size());
  if (k_anchor < 0 || k_rest < 0 || k_anchor + k_rest > n) {
    throw std::domain_error("split sizes must be non-negative and sum to at most n");
  }
  SplitNetwork net;
  auto& g = net.network;
  g.source = g.add_node();
  g.sink = g.add_node();
  std::array<int, 3> hub{};
  for (int c = 0; c < 3; ++c) hub[c] = g.add_node();
  const std::array<std::int64_t, 3> caps{k_anchor, k_rest, n - k_anchor - k_rest};
  for (int c = 0; c < 3; ++c) net.source_edge[c] = g.add_edge(g.source, hub[c], caps[c], 0);
  net.candidate_edge.assign(n, {-1, -1, -1});
  for (int i = 0; i < n; ++i) {
    int voter_node = g.add_node();
    for (int c = 0; c < 3; ++c) {
      int u = g.add_node();
      g.add_edge(hub[c], u, 1, 0);
      if (bribes[i][c]) net.candidate_edge[i][c] = g.add_edge(u, voter_node, 1, bribes[i][c]->cost);
    }
    g.add_edge(voter_node, g.sink, 1, 0);
  }
  g.demand = n;
  return net;
}

BribePlan decode_flow(const SplitNetwork& net, const flow::Flow& flow,
                      const TopClassBribes& bribes) {
  BribePlan plan;
  for (std::size_t i = 0; i < bribes.size(); ++i) {
    int chosen = -1;
    for (int c = 0; c < 3; ++c) {
      int e = net.candidate_edge[i][c];
      if (e >= 0 && flow.edge_flow[e] == 1) {
        if (chosen >= 0) throw std::logic_error("voter routed through two classes");
        chosen = c;
      }
    }
    if (chosen < 0) throw std::logic_error("voter left unrouted by a full-demand flow");
    const TopBribe& b = *bribes[i][chosen];
    if (b.changed) plan.replacements.emplace(static_cast<int>(i), b.order);
    plan.total_cost += b.cost;
  }
  return plan;
}

SolveResult solve_plurality_0(const ProblemInstance& instance) {
  instance.validate();
  if (instance.rule != ScoringRule::Plurality || instance.threshold != 0) {
    throw std::invalid_argument("flow solver requires Plurality with zero threshold");
  }
  const int n = instance.election.num_voters();
  const TopClassBribes bribes = compute_top_class_bribes(instance);
  const GoalChecker goals(instance);

  SolveResult result;
  for (int k1 = n; k1 >= 0; --k1) {
    for (int kr = n - k1; kr >= 0; --kr) {
      if (!goals.holds(k1 + kr, k1, n)) continue;
      SplitNetwork net = build_mcf_instance(k1, kr, bribes);
      ++result.work;
      auto f = flow::min_cost_flow(net.network);
      if (!f) continue;
      if (result.optimal_cost && f->total_cost >= *result.optimal_cost) continue;
      result.optimal_cost = f->total_cost;
      result.plan = decode_flow(net, *f, bribes);
    }
  }
  result.feasible = result.optimal_cost && *result.optimal_cost <= instance.budget;
  return result;
}

}  // namespace coalbribe::plurality_flow
