#pragma once

#include <algorithm>
#include <bit>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include "coalbribe/flow.hpp"
#include "coalbribe/reductions.hpp"

namespace testing {

/// Exhaustive exact-cover search over subset masks.
inline bool has_exact_cover(const coalbribe::reductions::ExactCover34Instance& x) {
  const int m = static_cast<int>(x.subsets.size());
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    std::vector<int> hits(x.num_elements, 0);
    for (int j = 0; j < m; ++j) {
      if (mask >> j & 1u) {
        for (int e : x.subsets[j]) ++hits[e];
      }
    }
    if (std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; })) return true;
  }
  return false;
}

/// A random valid instance with 8 elements and no exact cover.
inline coalbribe::reductions::ExactCover34Instance coverless_eight() {
  std::mt19937 rng(11);
  for (;;) {
    std::vector<int> slots;
    for (int e = 0; e < 8; ++e) slots.insert(slots.end(), 3, e);
    std::shuffle(slots.begin(), slots.end(), rng);
    coalbribe::reductions::ExactCover34Instance x{8, {}};
    for (int j = 0; j < 6; ++j) x.subsets.emplace_back(slots.begin() + 4 * j, slots.begin() + 4 * j + 4);
    try {
      x.validate();
    } catch (const std::domain_error&) {
      continue;
    }
    if (!has_exact_cover(x)) return x;
  }
}

/// One side of a balanced split cut by at most max_cut edges, if any.
inline std::optional<std::vector<int>> bisection_side(
    const coalbribe::reductions::MinBisectionInstance& g) {
  const int v = g.num_vertices;
  for (unsigned mask = 0; mask < (1u << v); ++mask) {
    if (std::popcount(mask) != v / 2) continue;
    int cut = 0;
    for (auto [a, b] : g.edges) cut += ((mask >> a) & 1u) != ((mask >> b) & 1u);
    if (cut > g.max_cut) continue;
    std::vector<int> side;
    for (int u = 0; u < v; ++u) {
      if (mask >> u & 1u) side.push_back(u);
    }
    return side;
  }
  return std::nullopt;
}

/// Least cost over every integral edge assignment that validates.
inline std::optional<std::int64_t> exhaustive_flow_cost(const coalbribe::flow::FlowNetwork& g) {
  using coalbribe::flow::Flow;
  const std::size_t e = g.edges.size();
  Flow f;
  f.edge_flow.assign(e, 0);
  std::optional<std::int64_t> best;
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == e) {
      if (!validate_flow(g, f)) return;
      std::int64_t c = 0;
      for (std::size_t j = 0; j < e; ++j) c += f.edge_flow[j] * g.edges[j].cost;
      if (!best || c < *best) best = c;
      return;
    }
    for (std::int64_t v = 0; v <= g.edges[k].capacity; ++v) {
      f.edge_flow[k] = v;
      self(self, k + 1);
    }
    f.edge_flow[k] = 0;
  };
  rec(rec, 0);
  return best;
}

/// Random network with 2..5 nodes, 1..8 edges, capacities <= 3, costs <= 4.
inline coalbribe::flow::FlowNetwork random_network(std::mt19937_64& rng) {
  coalbribe::flow::FlowNetwork g;
  int nodes = 2 + static_cast<int>(rng() % 4);
  for (int v = 0; v < nodes; ++v) g.add_node();
  g.source = 0;
  g.sink = nodes - 1;
  int edges = 1 + static_cast<int>(rng() % 8);
  for (int k = 0; k < edges; ++k) {
    int a = static_cast<int>(rng() % nodes);
    int b = static_cast<int>(rng() % nodes);
    if (a == b) b = (b + 1) % nodes;
    g.add_edge(a, b, static_cast<std::int64_t>(rng() % 4), static_cast<std::int64_t>(rng() % 5));
  }
  g.demand = static_cast<std::int64_t>(rng() % 4);
  return g;
}

}  // namespace testing
