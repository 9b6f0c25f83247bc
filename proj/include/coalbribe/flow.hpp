#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace coalbribe::flow {

struct Edge {
  int from = 0;
  int to = 0;
  std::int64_t capacity = 0;
  std::int64_t cost = 0;
};

/// Directed network with non-negative integral capacities and costs and a
/// demand to route from source to sink.
struct FlowNetwork {
  int num_nodes = 0;
  int source = 0;
  int sink = 1;
  std::int64_t demand = 0;
  std::vector<Edge> edges;

  int add_node() { return num_nodes++; }
  /// Returns the edge index.
  int add_edge(int from, int to, std::int64_t capacity, std::int64_t cost);
  /// Throws std::domain_error on negative data, bad endpoints or source == sink.
  void validate() const;
};

struct Flow {
  std::vector<std::int64_t> edge_flow;  ///< indexed like FlowNetwork::edges
  std::int64_t total_cost = 0;
};

/// Minimum-cost integral flow of exactly `demand` units by successive shortest
/// augmenting paths with Dijkstra on reduced costs. nullopt when the maximum
/// flow falls short of the demand.
std::optional<Flow> min_cost_flow(const FlowNetwork& network);

/// Capacity, conservation and demand constraints all hold.
bool validate_flow(const FlowNetwork& network, const Flow& flow);

}  // namespace coalbribe::flow
