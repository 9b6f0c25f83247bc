#pragma once

#include <array>
#include <optional>
#include <vector>

#include "coalbribe/flow.hpp"
#include "coalbribe/instance.hpp"
#include "coalbribe/solution.hpp"

namespace coalbribe::plurality_flow {

/// Which group of parties a voter's new top choice comes from.
enum class TopClass { Anchor = 0, Rest = 1, Outside = 2 };

struct TopBribe {
  PreferenceOrder order;
  Cost cost = 0;
  bool changed = false;
};

/// Cheapest replacement per class for each voter; nullopt where no admissible
/// order puts a party of that class first.
using TopClassBribes = std::vector<std::array<std::optional<TopBribe>, 3>>;

/// Cheapest bribe of `voter` whose new top belongs to `cls`. Swap or shift only.
std::optional<TopBribe> min_bribe_to_top(const ProblemInstance& instance, int voter, TopClass cls);

TopClassBribes compute_top_class_bribes(const ProblemInstance& instance);

/// Node/edge bookkeeping of the network built for one (k1, k_rest) split.
struct SplitNetwork {
  flow::FlowNetwork network;
  /// candidate_edge[i][cls]: edge (u_{i,cls}, v_i), -1 when omitted.
  std::vector<std::array<int, 3>> candidate_edge;
  std::array<int, 3> source_edge{};
};

/// Network whose min-cost flow is the cheapest bribe giving exactly `k_anchor`
/// top votes to the anchor and `k_rest` to the rest of the coalition.
SplitNetwork build_mcf_instance(int k_anchor, int k_rest, const TopClassBribes& bribes);

/// Reads the chosen class per voter off an integral flow.
BribePlan decode_flow(const SplitNetwork& net, const flow::Flow& flow,
                      const TopClassBribes& bribes);

/// Exact solver for Plurality without threshold under swap and shift bribery.
SolveResult solve_plurality_0(const ProblemInstance& instance);

}  // namespace coalbribe::plurality_flow
