#include "coalbribe/plurality_dp.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace coalbribe::plurality_dp {

namespace {

Cost add(Cost a, Cost b) { return (a >= kInfiniteCost || b >= kInfiniteCost) ? kInfiniteCost : a + b; }

/// Active votes a party keeps from `count` votes.
int active_votes(int count, Points bound) { return count >= bound ? count : 0; }

}  // namespace

PartySupport make_support(PartyId party, std::span<const int> voters,
                          std::span<const Cost> prices) {
  PartySupport s;
  s.party = party;
  s.voters.assign(voters.begin(), voters.end());
  std::stable_sort(s.voters.begin(), s.voters.end(),
                   [&](int a, int b) { return prices[a] < prices[b]; });
  s.prefix.assign(s.voters.size() + 1, 0);
  for (std::size_t k = 0; k < s.voters.size(); ++k) {
    s.prefix[k + 1] = s.prefix[k] + prices[s.voters[k]];
  }
  return s;
}

Cost mincost(const PartySupport& support, int count) {
  if (count < 0 || count > support.size()) return kInfiniteCost;
  return support.prefix[count];
}

FTable::FTable(int n) : n_(n), cells_(static_cast<std::size_t>(n + 1) * (n + 1), kInfiniteCost) {}

Cost FTable::at(int bribed, int active) const {
  if (bribed < 0 || active < 0 || bribed > n_ || active > n_) return kInfiniteCost;
  return cells_[bribed * (n_ + 1) + active];
}

HTable::HTable(int n)
    : n_(n), cells_(static_cast<std::size_t>(n + 1) * (n + 1) * (n + 1), kInfiniteCost) {}

Cost HTable::at(int bribed, int added, int active) const {
  if (bribed < 0 || added < 0 || active < 0 || bribed > n_ || added > n_ || active > n_) {
    return kInfiniteCost;
  }
  return cells_[(bribed * (n_ + 1) + added) * (n_ + 1) + active];
}

std::vector<FTable> compute_f_layers(std::span<const PartySupport> parties, int n,
                                     Points bound) {
  std::vector<FTable> layers;
  layers.emplace_back(n);
  layers.back().cell(0, 0) = 0;
  for (const auto& party : parties) {
    const FTable& prev = layers.back();
    FTable next(n);
    for (int l = 0; l <= n; ++l) {
      for (int a = 0; a <= n; ++a) {
        Cost base = prev.at(l, a);
        if (base >= kInfiniteCost) continue;
        for (int lj = 0; lj <= party.size() && l + lj <= n; ++lj) {
          int aj = active_votes(party.size() - lj, bound);
          if (a + aj > n) continue;
          Cost c = base + party.prefix[lj];
          Cost& dst = next.cell(l + lj, a + aj);
          dst = std::min(dst, c);
        }
      }
    }
    layers.push_back(std::move(next));
  }
  return layers;
}

std::vector<HTable> compute_h_layers(std::span<const PartySupport> parties, int n,
                                     Points bound) {
  std::vector<HTable> layers;
  layers.emplace_back(n);
  layers.back().cell(0, 0, 0) = 0;
  for (const auto& party : parties) {
    const HTable& prev = layers.back();
    HTable next(n);
    for (int l = 0; l <= n; ++l) {
      for (int d = 0; d <= n; ++d) {
        for (int a = 0; a <= n; ++a) {
          Cost base = prev.at(l, d, a);
          if (base >= kInfiniteCost) continue;
          for (int lj = 0; lj <= party.size() && l + lj <= n; ++lj) {
            Cost c = base + party.prefix[lj];
            for (int dj = 0; d + dj <= n; ++dj) {
              int aj = active_votes(party.size() - lj + dj, bound);
              if (a + aj > n) continue;
              Cost& dst = next.cell(l + lj, d + dj, a + aj);
              dst = std::min(dst, c);
            }
          }
        }
      }
    }
    layers.push_back(std::move(next));
  }
  return layers;
}

Cost compute_g(const FTable& outside, const HTable& rest, int bribed, int active_outside,
               int added, int active_rest) {
  Cost best = kInfiniteCost;
  for (int lr = 0; lr <= bribed; ++lr) {
    best = std::min(best, add(rest.at(lr, added, active_rest),
                              outside.at(bribed - lr, active_outside)));
  }
  return best;
}

std::uint64_t DpTables::cell_count() const {
  const std::uint64_t side = static_cast<std::uint64_t>(n) + 1;
  return f_layers.size() * side * side + h_layers.size() * side * side * side;
}

DpTables build_tables(const ProblemInstance& instance) {
  instance.validate();
  if (instance.rule != ScoringRule::Plurality) {
    throw std::invalid_argument("threshold DP requires the Plurality rule");
  }
  if (instance.costs.type() != BriberyType::Unit && instance.costs.type() != BriberyType::Dollar) {
    throw std::invalid_argument("threshold DP requires 1- or $-bribery");
  }
  const Election& e = instance.election;
  const int n = e.num_voters();
  const int m = e.num_parties();
  std::vector<Cost> prices(n);
  for (int i = 0; i < n; ++i) prices[i] = instance.costs.price(i);
  std::vector<std::vector<int>> supporters(m);
  for (int i = 0; i < n; ++i) supporters[e.order(i).top()].push_back(i);

  DpTables t;
  t.n = n;
  t.bound = instance.activity_bound();
  const PartyId anchor = instance.anchor();
  const CoalitionMask mask = instance.coalition_mask();
  t.anchor = make_support(anchor, supporters[anchor], prices);
  for (PartyId p = 0; p < m; ++p) {
    if (p == anchor) continue;
    auto support = make_support(p, supporters[p], prices);
    (mask[p] ? t.rest : t.outsiders).push_back(std::move(support));
  }
  t.f_layers = compute_f_layers(t.outsiders, n, t.bound);
  t.h_layers = compute_h_layers(t.rest, n, t.bound);
  return t;
}

namespace {

struct Choice {
  Cost cost = kInfiniteCost;
  int bribed_rest = 0, added = 0, active_rest = 0;
  int bribed_out = 0, active_out = 0;
  int anchor_active = 0;
};

/// True when choice `a` has the larger coalition share than `b` (cost tie-break).
bool better_share(const Choice& a, const Choice& b) {
  // share = S / (S + out); compare S_a * (S_b + out_b) > S_b * (S_a + out_a)
  __int128 sa = a.active_rest + a.anchor_active;
  __int128 sb = b.active_rest + b.anchor_active;
  return sa * (sb + b.active_out) > sb * (sa + a.active_out);
}

/// Per-party (bribed, added) amounts reproducing an h cell, outermost party last.
std::vector<std::pair<int, int>> trace_h(const DpTables& t, int l, int d, int a) {
  std::vector<std::pair<int, int>> out(t.rest.size());
  for (std::size_t k = t.rest.size(); k >= 1; --k) {
    const PartySupport& party = t.rest[k - 1];
    const HTable& prev = t.h_layers[k - 1];
    const Cost target = t.h_layers[k].at(l, d, a);
    bool found = false;
    for (int lj = 0; lj <= std::min(l, party.size()) && !found; ++lj) {
      for (int dj = 0; dj <= d && !found; ++dj) {
        int aj = active_votes(party.size() - lj + dj, t.bound);
        if (aj > a) continue;
        if (add(prev.at(l - lj, d - dj, a - aj), party.prefix[lj]) == target) {
          out[k - 1] = {lj, dj};
          l -= lj;
          d -= dj;
          a -= aj;
          found = true;
        }
      }
    }
    if (!found) throw std::logic_error("h table backtrack failed");
  }
  return out;
}

std::vector<int> trace_f(const DpTables& t, int l, int a) {
  std::vector<int> out(t.outsiders.size());
  for (std::size_t k = t.outsiders.size(); k >= 1; --k) {
    const PartySupport& party = t.outsiders[k - 1];
    const FTable& prev = t.f_layers[k - 1];
    const Cost target = t.f_layers[k].at(l, a);
    bool found = false;
    for (int lj = 0; lj <= std::min(l, party.size()) && !found; ++lj) {
      int aj = active_votes(party.size() - lj, t.bound);
      if (aj > a) continue;
      if (add(prev.at(l - lj, a - aj), party.prefix[lj]) == target) {
        out[k - 1] = lj;
        l -= lj;
        a -= aj;
        found = true;
      }
    }
    if (!found) throw std::logic_error("f table backtrack failed");
  }
  return out;
}

BribePlan reconstruct(const ProblemInstance& instance, const DpTables& t, const Choice& c) {
  struct Bribed {
    int voter;
    PartyId from;
  };
  std::vector<Bribed> bribed;
  std::vector<PartyId> targets;

  auto rest_trace = trace_h(t, c.bribed_rest, c.added, c.active_rest);
  for (std::size_t k = 0; k < t.rest.size(); ++k) {
    auto [lj, dj] = rest_trace[k];
    for (int q = 0; q < lj; ++q) bribed.push_back({t.rest[k].voters[q], t.rest[k].party});
    for (int q = 0; q < dj; ++q) targets.push_back(t.rest[k].party);
  }
  auto out_trace = trace_f(t, c.bribed_out, c.active_out);
  for (std::size_t k = 0; k < t.outsiders.size(); ++k) {
    for (int q = 0; q < out_trace[k]; ++q) {
      bribed.push_back({t.outsiders[k].voters[q], t.outsiders[k].party});
    }
  }
  const int free_votes = c.bribed_rest + c.bribed_out;
  const int topup = std::max(0, c.added - free_votes);
  for (int q = 0; q < topup; ++q) bribed.push_back({t.anchor.voters[q], t.anchor.party});
  while (targets.size() < bribed.size()) targets.push_back(t.anchor.party);

  // Hand each bribed voter a target other than its current top where possible:
  // always serve the target party with the most remaining slots.
  std::map<PartyId, int> remaining;
  for (PartyId p : targets) ++remaining[p];
  BribePlan plan;
  const Election& e = instance.election;
  for (const auto& b : bribed) {
    PartyId pick = -1;
    for (const auto& [p, cnt] : remaining) {
      if (cnt == 0 || p == b.from) continue;
      if (pick < 0 || cnt > remaining[pick]) pick = p;
    }
    if (pick < 0) pick = b.from;
    --remaining[pick];
    if (pick != b.from) plan.replacements.emplace(b.voter, e.order(b.voter).lifted_to_top(pick));
  }
  auto cost = plan_cost(instance.costs, instance.coalition_mask(), e, plan);
  plan.total_cost = cost.value_or(kInfiniteCost);
  return plan;
}

}  // namespace

SolveResult solve_plurality_t_dollar(const ProblemInstance& instance) {
  DpTables t = build_tables(instance);
  const int n = t.n;
  const GoalChecker goals(instance);
  const int anchor_votes = t.anchor.size();

  // Prefix minima of f over the active-outside count, with the argmin.
  const FTable& f = t.f();
  std::vector<std::vector<std::pair<Cost, int>>> f_best(n + 1,
                                                         std::vector<std::pair<Cost, int>>(n + 1));
  for (int l = 0; l <= n; ++l) {
    std::pair<Cost, int> run{kInfiniteCost, -1};
    for (int a = 0; a <= n; ++a) {
      if (f.at(l, a) < run.first) run = {f.at(l, a), a};
      f_best[l][a] = run;
    }
  }

  Choice best;
  std::uint64_t scanned = 0;
  const HTable& h = t.h();
  for (int lr = 0; lr <= n; ++lr) {
    for (int d = 0; d <= n; ++d) {
      for (int ar = 0; ar <= n; ++ar) {
        Cost hc = h.at(lr, d, ar);
        if (hc >= kInfiniteCost) continue;
        for (int lo = 0; lr + lo <= n; ++lo) {
          ++scanned;
          const int l = lr + lo;
          Cost topup = d > l ? mincost(t.anchor, d - l) : 0;
          if (topup >= kInfiniteCost) continue;
          int anchor_active = active_votes(anchor_votes + l - d, t.bound);
          Points coalition = ar + anchor_active;
          // The goal test is monotone in the outsiders' active votes; find the
          // largest admissible count.
          if (!goals.holds(coalition, anchor_active, coalition)) continue;
          int lo_a = 0, hi_a = n;
          while (lo_a < hi_a) {
            int mid = (lo_a + hi_a + 1) / 2;
            if (goals.holds(coalition, anchor_active, coalition + mid)) {
              lo_a = mid;
            } else {
              hi_a = mid - 1;
            }
          }
          auto [fc, ao] = f_best[lo][lo_a];
          if (fc >= kInfiniteCost) continue;
          Choice c{hc + fc + topup, lr, d, ar, lo, ao, anchor_active};
          if (c.cost < best.cost || (c.cost == best.cost && better_share(c, best))) best = c;
        }
      }
    }
  }

  SolveResult result;
  result.work = t.cell_count() + scanned;
  if (best.cost >= kInfiniteCost) return result;
  result.plan = reconstruct(instance, t, best);
  result.optimal_cost = result.plan.total_cost;
  result.feasible = *result.optimal_cost <= instance.budget;
  return result;
}

}  // namespace coalbribe::plurality_dp
