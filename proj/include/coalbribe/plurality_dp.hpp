#pragma once

#include <span>
#include <vector>

#include "coalbribe/instance.hpp"
#include "coalbribe/solution.hpp"

namespace coalbribe::plurality_dp {

/// Voters whose current top choice is `party`, cheapest first.
struct PartySupport {
  PartyId party = -1;
  std::vector<int> voters;   ///< voter indices sorted by ascending price
  std::vector<Cost> prefix;  ///< prefix[k] = summed price of the k cheapest

  int size() const { return static_cast<int>(voters.size()); }
};

PartySupport make_support(PartyId party, std::span<const int> voters,
                          std::span<const Cost> prices);

/// Least price of bribing `count` supporters; kInfiniteCost if too few exist.
Cost mincost(const PartySupport& support, int count);

/// f(D, l, a): least price of bribing l supporters of D leaving exactly a
/// active votes among D. Indexed l, a in 0..n.
class FTable {
 public:
  FTable() = default;
  explicit FTable(int n);
  Cost at(int bribed, int active) const;
  Cost& cell(int bribed, int active) { return cells_[bribed * (n_ + 1) + active]; }
  int n() const { return n_; }

 private:
  int n_ = 0;
  std::vector<Cost> cells_;
};

/// h(D, l, d, a): least price of bribing l supporters of D such that d extra
/// votes, spread over D, yield exactly a active votes. Indexed 0..n each.
class HTable {
 public:
  HTable() = default;
  explicit HTable(int n);
  Cost at(int bribed, int added, int active) const;
  Cost& cell(int bribed, int added, int active) {
    return cells_[(bribed * (n_ + 1) + added) * (n_ + 1) + active];
  }
  int n() const { return n_; }

 private:
  int n_ = 0;
  std::vector<Cost> cells_;
};

/// Layer k holds f over the first k parties; layer 0 is the empty set.
std::vector<FTable> compute_f_layers(std::span<const PartySupport> parties, int n,
                                     Points bound);
std::vector<HTable> compute_h_layers(std::span<const PartySupport> parties, int n,
                                     Points bound);

/// g(l, a_out, d, a_rest) = min over l' of h(l', d, a_rest) + f(l - l', a_out).
Cost compute_g(const FTable& outside, const HTable& rest, int bribed, int active_outside,
               int added, int active_rest);

/// Tables for one instance, with the coalition split into anchor, rest and outsiders.
struct DpTables {
  PartySupport anchor;
  std::vector<PartySupport> rest;      ///< coalition minus the anchor
  std::vector<PartySupport> outsiders; ///< parties outside the coalition
  std::vector<FTable> f_layers;
  std::vector<HTable> h_layers;
  Points bound = 0;
  int n = 0;

  const FTable& f() const { return f_layers.back(); }
  const HTable& h() const { return h_layers.back(); }
  Cost g(int bribed, int active_outside, int added, int active_rest) const {
    return compute_g(f(), h(), bribed, active_outside, added, active_rest);
  }
  std::uint64_t cell_count() const;
};

/// Requires a Plurality instance with Unit or Dollar prices.
DpTables build_tables(const ProblemInstance& instance);

/// Exact solver for Plurality (any threshold) under 1- and $-bribery.
/// Among least-cost bribes, the witness maximizes the coalition's seat share.
SolveResult solve_plurality_t_dollar(const ProblemInstance& instance);

}  // namespace coalbribe::plurality_dp
