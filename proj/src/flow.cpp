#include "coalbribe/flow.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>

namespace coalbribe::flow {

int FlowNetwork::add_edge(int from, int to, std::int64_t capacity, std::int64_t cost) {
  edges.push_back({from, to, capacity, cost});
  return static_cast<int>(edges.size()) - 1;
}

void FlowNetwork::validate() const {
  if (source == sink) throw std::domain_error("source and sink must differ");
  if (source < 0 || sink < 0 || source >= num_nodes || sink >= num_nodes) {
    throw std::domain_error("source or sink out of range");
  }
  if (demand < 0) throw std::domain_error("demand must be non-negative");
  for (const auto& e : edges) {
    if (e.from < 0 || e.to < 0 || e.from >= num_nodes || e.to >= num_nodes) {
      throw std::domain_error("edge endpoint out of range");
    }
    if (e.capacity < 0 || e.cost < 0) {
      throw std::domain_error("capacities and costs must be non-negative");
    }
  }
}

namespace {

constexpr std::int64_t kUnreached = std::numeric_limits<std::int64_t>::max() / 4;

struct Arc {
  int to;
  std::int64_t residual;
  std::int64_t cost;
  int reverse;   // index of the paired arc in adjacency[to]
  int original;  // network edge index, -1 for reverse arcs
};

}  // namespace

std::optional<Flow> min_cost_flow(const FlowNetwork& network) {
  network.validate();
  const int nodes = network.num_nodes;
  std::vector<std::vector<Arc>> adjacency(nodes);
  for (int k = 0; k < static_cast<int>(network.edges.size()); ++k) {
    const Edge& e = network.edges[k];
    int fwd = static_cast<int>(adjacency[e.from].size());
    int bwd = static_cast<int>(adjacency[e.to].size()) + (e.from == e.to ? 1 : 0);
    adjacency[e.from].push_back({e.to, e.capacity, e.cost, bwd, k});
    adjacency[e.to].push_back({e.from, 0, -e.cost, fwd, -1});
  }

  // Costs are non-negative, so zero potentials start out feasible.
  std::vector<std::int64_t> potential(nodes, 0);
  std::vector<std::int64_t> dist(nodes);
  std::vector<std::pair<int, int>> parent(nodes);
  std::int64_t routed = 0;
  std::int64_t total_cost = 0;

  while (routed < network.demand) {
    std::fill(dist.begin(), dist.end(), kUnreached);
    dist[network.source] = 0;
    using Item = std::pair<std::int64_t, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
    queue.emplace(0, network.source);
    while (!queue.empty()) {
      auto [d, u] = queue.top();
      queue.pop();
      if (d > dist[u]) continue;
      for (int k = 0; k < static_cast<int>(adjacency[u].size()); ++k) {
        const Arc& a = adjacency[u][k];
        if (a.residual <= 0) continue;
        std::int64_t nd = d + a.cost + potential[u] - potential[a.to];
        if (nd < dist[a.to]) {
          dist[a.to] = nd;
          parent[a.to] = {u, k};
          queue.emplace(nd, a.to);
        }
      }
    }
    if (dist[network.sink] >= kUnreached) return std::nullopt;
    for (int v = 0; v < nodes; ++v) {
      if (dist[v] < kUnreached) potential[v] += dist[v];
    }
    std::int64_t push = network.demand - routed;
    for (int v = network.sink; v != network.source; v = parent[v].first) {
      push = std::min(push, adjacency[parent[v].first][parent[v].second].residual);
    }
    for (int v = network.sink; v != network.source; v = parent[v].first) {
      Arc& a = adjacency[parent[v].first][parent[v].second];
      a.residual -= push;
      adjacency[v][a.reverse].residual += push;
      total_cost += push * a.cost;
    }
    routed += push;
  }

  Flow result;
  result.edge_flow.assign(network.edges.size(), 0);
  for (const auto& arcs : adjacency) {
    for (const Arc& a : arcs) {
      if (a.original >= 0) {
        result.edge_flow[a.original] = network.edges[a.original].capacity - a.residual;
      }
    }
  }
  result.total_cost = total_cost;
  return result;
}

bool validate_flow(const FlowNetwork& network, const Flow& flow) {
  if (flow.edge_flow.size() != network.edges.size()) return false;
  std::vector<std::int64_t> balance(network.num_nodes, 0);
  for (std::size_t k = 0; k < network.edges.size(); ++k) {
    const Edge& e = network.edges[k];
    std::int64_t f = flow.edge_flow[k];
    if (f < 0 || f > e.capacity) return false;
    balance[e.from] -= f;
    balance[e.to] += f;
  }
  for (int v = 0; v < network.num_nodes; ++v) {
    if (v == network.source || v == network.sink) continue;
    if (balance[v] != 0) return false;
  }
  std::int64_t out_of_source = 0;
  std::int64_t into_sink = 0;
  for (std::size_t k = 0; k < network.edges.size(); ++k) {
    const Edge& e = network.edges[k];
    if (e.from == network.source) out_of_source += flow.edge_flow[k];
    if (e.to == network.source) out_of_source -= flow.edge_flow[k];
    if (e.to == network.sink) into_sink += flow.edge_flow[k];
    if (e.from == network.sink) into_sink -= flow.edge_flow[k];
  }
  return out_of_source == network.demand && into_sink == network.demand;
}

}  // namespace coalbribe::flow
