#include "coalbribe/oracle.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <tuple>
#include <map>
#include <numeric>
#include <unordered_map>

namespace coalbribe::oracle {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t mul_sat(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  if (a > kSaturated / b) return kSaturated;
  return a * b;
}

std::uint64_t factorial_sat(int m) {
  std::uint64_t f = 1;
  for (int k = 2; k <= m; ++k) f = mul_sat(f, static_cast<std::uint64_t>(k));
  return f;
}

std::uint64_t binomial_sat(std::uint64_t top, std::uint64_t k) {
  k = std::min(k, top - k);
  std::uint64_t r = 1;
  for (std::uint64_t j = 1; j <= k; ++j) {
    // r * (top - k + j) / j stays integral at every step.
    std::uint64_t num = top - k + j;
    if (r > kSaturated / num) return kSaturated;
    r = r * num / j;
  }
  return r;
}

// Multisets of `voters` options whose summed cost stays within `bound`.
std::uint64_t affordable_compositions(const std::vector<Cost>& costs, std::uint64_t voters,
                                      Cost bound) {
  const std::uint64_t all = binomial_sat(voters + costs.size() - 1, costs.size() - 1);
  const Cost dearest = *std::max_element(costs.begin(), costs.end());
  if (bound >= kInfiniteCost || dearest == 0 ||
      static_cast<double>(dearest) * static_cast<double>(voters) <= static_cast<double>(bound)) {
    return all;
  }
  const double cells = static_cast<double>(voters + 1) * static_cast<double>(bound + 1) *
                       static_cast<double>(costs.size());
  if (cells > 2e7) return all;
  // ways[j][b]: multisets of j voters over the options seen so far costing b.
  const std::size_t width = static_cast<std::size_t>(bound) + 1;
  std::vector<std::vector<std::uint64_t>> ways(voters + 1, std::vector<std::uint64_t>(width, 0));
  ways[0][0] = 1;
  for (Cost c : costs) {
    for (std::uint64_t j = 1; j <= voters; ++j) {
      for (std::size_t b = static_cast<std::size_t>(c); b < width; ++b) {
        std::uint64_t add = ways[j - 1][b - static_cast<std::size_t>(c)];
        ways[j][b] = ways[j][b] > kSaturated - add ? kSaturated : ways[j][b] + add;
      }
    }
  }
  std::uint64_t total = 0;
  for (std::uint64_t w : ways[voters]) total = total > kSaturated - w ? kSaturated : total + w;
  return total;
}

struct VecHash {
  std::size_t operator()(const std::vector<Points>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (Points x : v) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ull;
    return h;
  }
};

struct ScoredOption {
  std::vector<Points> scores;
  Cost cost = 0;
  PreferenceOrder order;
};

// Cheapest order per distinct score vector, dropping anything above `bound`.
std::vector<ScoredOption> by_scores(std::vector<VoterOption> options, ScoringRule rule, Cost bound) {
  std::map<std::vector<Points>, ScoredOption> best;
  for (auto& o : options) {
    if (o.cost > bound) continue;
    auto sv = score_vector(o.order, rule);
    auto it = best.find(sv);
    if (it == best.end() || o.cost < it->second.cost) {
      best[sv] = ScoredOption{sv, o.cost, std::move(o.order)};
    }
  }
  std::vector<ScoredOption> out;
  for (auto& [sv, o] : best) out.push_back(std::move(o));
  std::stable_sort(out.begin(), out.end(),
                   [](const ScoredOption& a, const ScoredOption& b) { return a.cost < b.cost; });
  return out;
}

// Under Plurality only the top matters; the cheapest way to a given top is to
// lift that party, and shifts cannot lift a non-member.
std::vector<VoterOption> plurality_top_options(const ProblemInstance& inst, int voter) {
  const PreferenceOrder& order = inst.election.order(voter);
  const CoalitionMask mask = inst.coalition_mask();
  std::vector<VoterOption> out{{order, 0}};
  for (int pos = 2; pos <= order.size(); ++pos) {
    PartyId p = order.at(pos);
    Cost cost = 0;
    switch (inst.costs.type()) {
      case BriberyType::Unit:
      case BriberyType::Dollar:
        cost = inst.costs.price(voter);
        break;
      case BriberyType::Swap:
        for (int above = 1; above < pos; ++above) {
          cost += inst.costs.swap_prices(voter)[order.at(above)][p];
        }
        break;
      case BriberyType::Shift:
        if (!mask[p]) continue;
        cost = inst.costs.shift_table(voter)(pos - 1);
        break;
    }
    out.push_back({order.lifted_to_top(p), cost});
  }
  return out;
}

bool same_prices(const CostModel& model, int a, int b) {
  switch (model.type()) {
    case BriberyType::Unit:
      return true;
    case BriberyType::Dollar:
      return model.price(a) == model.price(b);
    case BriberyType::Swap:
      return model.swap_prices(a) == model.swap_prices(b);
    case BriberyType::Shift:
      return model.shift_table(a) == model.shift_table(b);
  }
  return false;
}

// Voters with equal orders and equal prices are interchangeable; the search
// picks how many of each class take each option.
struct VoterClass {
  std::vector<int> voters;
  std::vector<ScoredOption> options;
};

std::vector<VoterClass> group_voters(const ProblemInstance& inst, bool merge) {
  std::vector<VoterClass> classes;
  for (int i = 0; i < inst.election.num_voters(); ++i) {
    VoterClass* home = nullptr;
    if (merge) {
      for (auto& c : classes) {
        int r = c.voters.front();
        if (inst.election.order(r) == inst.election.order(i) && same_prices(inst.costs, r, i)) {
          home = &c;
          break;
        }
      }
    }
    if (home) {
      home->voters.push_back(i);
    } else {
      classes.push_back({{i}, {}});
    }
  }
  return classes;
}

class ClassSearch {
 public:
  ClassSearch(const ProblemInstance& inst, std::vector<VoterClass> classes, Cost bound, bool prune)
      : classes_(std::move(classes)),
        goals_(inst),
        bound_(bound),
        prune_(prune),
        tally_(inst.election.num_parties(), 0),
        counts_(classes_.size()),
        memo_(classes_.size()) {}

  void run() { visit(0, 0); }

  std::optional<Cost> best() const { return best_; }
  std::uint64_t expansions() const { return expansions_; }

  /// Option chosen for every voter in the best plan found.
  std::vector<std::pair<int, const ScoredOption*>> assignment() const {
    std::vector<std::pair<int, const ScoredOption*>> out;
    for (std::size_t c = 0; c < classes_.size(); ++c) {
      std::size_t next = 0;
      for (std::size_t k = 0; k < classes_[c].options.size(); ++k) {
        for (int j = 0; j < best_counts_[c][k]; ++j) {
          out.emplace_back(classes_[c].voters[next++], &classes_[c].options[k]);
        }
      }
    }
    return out;
  }

 private:
  void visit(std::size_t c, Cost spent) {
    ++expansions_;
    if (spent > bound_) return;
    if (prune_ && best_ && spent >= *best_) return;
    if (c == classes_.size()) {
      if (goals_(tally_) && (!best_ || spent < *best_)) {
        best_ = spent;
        best_counts_ = counts_;
      }
      return;
    }
    if (prune_) {
      auto [it, fresh] = memo_[c].try_emplace(tally_, spent);
      if (!fresh) {
        if (it->second <= spent) return;
        it->second = spent;
      }
    }
    const VoterClass& cls = classes_[c];
    counts_[c].assign(cls.options.size(), 0);
    distribute(c, 0, static_cast<int>(cls.voters.size()), spent);
  }

  // Splits the class's remaining voters over options k.. and recurses.
  void distribute(std::size_t c, std::size_t k, int remaining, Cost spent) {
    const VoterClass& cls = classes_[c];
    const ScoredOption& o = cls.options[k];
    if (k + 1 == cls.options.size()) {
      apply(o, remaining);
      counts_[c][k] = remaining;
      visit(c + 1, spent + remaining * o.cost);
      counts_[c][k] = 0;
      apply(o, -remaining);
      return;
    }
    for (int take = remaining; take >= 0; --take) {
      apply(o, take);
      counts_[c][k] = take;
      distribute(c, k + 1, remaining - take, spent + take * o.cost);
      counts_[c][k] = 0;
      apply(o, -take);
    }
  }

  void apply(const ScoredOption& o, int times) {
    if (times == 0) return;
    for (std::size_t p = 0; p < tally_.size(); ++p) tally_[p] += times * o.scores[p];
  }

  std::vector<VoterClass> classes_;
  GoalChecker goals_;
  Cost bound_;
  bool prune_;
  std::vector<Points> tally_;
  std::vector<std::vector<int>> counts_;
  std::vector<std::vector<int>> best_counts_;
  std::optional<Cost> best_;
  std::uint64_t expansions_ = 0;
  std::vector<std::unordered_map<std::vector<Points>, Cost, VecHash>> memo_;
};

// ---------------------------------------------------------------------------
// Borda with per-voter prices at large m. For CB goals a bribed voter may
// always rank the coalition as a block above everyone else: that only raises
// member scores and lowers outsider scores. The two blocks are then filled
// independently: maximize active coalition points, minimize active outsider
// points.

class BlockAssignment {
 public:
  // values: the block's point values, one per party. `maximize` selects the
  // objective over active points (base + assigned >= bound).
  BlockAssignment(std::vector<Points> base, std::vector<Points> values, int voters, Points bound,
                  bool maximize, std::uint64_t state_limit)
      : base_(std::move(base)),
        values_(std::move(values)),
        voters_(voters),
        bound_(bound),
        maximize_(maximize),
        state_limit_(state_limit) {}

  /// Optimal objective and, per voter, the value index given to each party.
  std::pair<Points, std::vector<std::vector<int>>> solve() {
    const int r = static_cast<int>(base_.size());
    std::vector<std::uint64_t> full(voters_, r == 64 ? ~0ull : ((1ull << r) - 1));
    Points value = best_from(0, full);
    std::vector<std::vector<int>> pick(voters_, std::vector<int>(r, -1));
    std::vector<std::uint64_t> masks = full;
    for (int p = 0; p < r; ++p) {
      std::vector<int> chosen(voters_);
      bool found = false;
      choose(p, masks, chosen, 0, 0, [&](Points gain, const std::vector<std::uint64_t>& next) {
        if (found) return;
        if (gain + best_from(p + 1, next) == best_from(p, masks)) {
          found = true;
          for (int v = 0; v < voters_; ++v) pick[v][p] = chosen[v];
          masks = next;
        }
      });
      if (!found) throw std::logic_error("block assignment reconstruction failed");
    }
    return {value, std::move(pick)};
  }

 private:
  using Key = std::vector<std::uint64_t>;

  // Value contributed by party p when each voter v gives it values_[chosen[v]].
  Points gain(int p, Points added) const {
    Points total = base_[p] + added;
    return total >= bound_ ? total : 0;
  }

  template <class F>
  void choose(int p, const Key& masks, std::vector<int>& chosen, int v, Points added, F&& visit) {
    if (v == voters_) {
      Key next = masks;
      for (int u = 0; u < voters_; ++u) next[u] &= ~(1ull << chosen[u]);
      visit(gain(p, added), next);
      return;
    }
    for (std::uint64_t rest = masks[v]; rest; rest &= rest - 1) {
      int bit = std::countr_zero(rest);
      chosen[v] = bit;
      choose(p, masks, chosen, v + 1, added + values_[bit], visit);
    }
  }

  Points best_from(int p, const Key& masks) {
    if (p == static_cast<int>(base_.size())) return 0;
    Key key = masks;
    std::sort(key.begin(), key.end());  // voters are interchangeable
    key.push_back(static_cast<std::uint64_t>(p));
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    if (memo_.size() >= state_limit_) {
      throw Refusal("block assignment exceeds the expansion limit", memo_.size() + 1);
    }
    std::optional<Points> best;
    std::vector<int> chosen(voters_);
    choose(p, masks, chosen, 0, 0, [&](Points g, const Key& next) {
      Points total = g + best_from(p + 1, next);
      if (!best || (maximize_ ? total > *best : total < *best)) best = total;
    });
    memo_[key] = *best;
    return *best;
  }

  struct KeyHash {
    std::size_t operator()(const Key& k) const {
      std::size_t h = 1469598103934665603ull;
      for (auto x : k) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ull;
      return h;
    }
  };

  std::vector<Points> base_;
  std::vector<Points> values_;
  int voters_;
  Points bound_;
  bool maximize_;
  std::uint64_t state_limit_;
  std::unordered_map<Key, Points, KeyHash> memo_;
};

SolveResult borda_price_subsets(const ProblemInstance& inst, Cost bound,
                                const SearchBudget& budget) {
  const int n = inst.election.num_voters();
  const int m = inst.election.num_parties();
  if (n > 40) throw Refusal("too many voters for subset search", kSaturated);

  std::vector<std::pair<Cost, std::uint64_t>> subsets;
  const std::uint64_t all = 1ull << n;
  if (all > budget.max_expansions * 8) throw Refusal("too many voter subsets", all);
  for (std::uint64_t s = 0; s < all; ++s) {
    Cost c = 0;
    for (int i = 0; i < n; ++i) if (s >> i & 1) c += inst.costs.price(i);
    if (c <= bound) subsets.emplace_back(c, s);
  }
  if (subsets.size() > budget.max_expansions) {
    throw Refusal("too many affordable voter subsets", subsets.size());
  }
  std::stable_sort(subsets.begin(), subsets.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return std::popcount(a.second) < std::popcount(b.second);
  });

  const CoalitionMask mask = inst.coalition_mask();
  std::vector<PartyId> members;
  std::vector<PartyId> outsiders;
  for (PartyId p = 0; p < m; ++p) (mask[p] ? members : outsiders).push_back(p);
  const int size = static_cast<int>(members.size());
  std::vector<Points> member_values(size);
  std::vector<Points> outsider_values(outsiders.size());
  for (int j = 0; j < size; ++j) member_values[j] = m - 1 - j;
  for (std::size_t j = 0; j < outsiders.size(); ++j) outsider_values[j] = static_cast<Points>(j);

  const GoalChecker goals(inst);
  const Points threshold = goals.bound();
  SolveResult result;
  for (const auto& [cost, set] : subsets) {
    ++result.work;
    const int k = std::popcount(set);
    std::vector<Points> base(m, 0);
    for (int i = 0; i < n; ++i) {
      if (set >> i & 1) continue;
      auto sv = score_vector(inst.election.order(i), ScoringRule::Borda);
      for (PartyId p = 0; p < m; ++p) base[p] += sv[p];
    }
    if (k == 0) {
      if (!goals(base)) continue;
      result.optimal_cost = 0;
      break;
    }

    auto pick_base = [&](const std::vector<PartyId>& parties) {
      std::vector<Points> b;
      for (PartyId p : parties) b.push_back(base[p]);
      return b;
    };
    std::vector<std::vector<int>> outsider_pick(k, std::vector<int>(outsiders.size()));
    Points outsider_active = 0;
    if (!outsiders.empty()) {
      BlockAssignment low(pick_base(outsiders), outsider_values, k, threshold, false,
                          budget.max_expansions);
      std::tie(outsider_active, outsider_pick) = low.solve();
    }

    Points member_total = 0;
    for (PartyId p : members) member_total += base[p];
    member_total += k * std::accumulate(member_values.begin(), member_values.end(), Points{0});
    if (!goals.holds(member_total, 0, member_total + outsider_active)) continue;

    // Cheap lower bound: the same ranking of members, best-supported first,
    // in every bribed voter.
    std::vector<int> order(size);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return base[members[a]] > base[members[b]]; });
    std::vector<std::vector<int>> member_pick(k, std::vector<int>(size));
    Points member_active = 0;
    for (int r = 0; r < size; ++r) {
      Points t = base[members[order[r]]] + k * member_values[r];
      if (t >= threshold) member_active += t;
      for (int v = 0; v < k; ++v) member_pick[v][order[r]] = r;
    }
    if (!goals.holds(member_active, 0, member_active + outsider_active)) {
      BlockAssignment high(pick_base(members), member_values, k, threshold, true,
                           budget.max_expansions);
      std::tie(member_active, member_pick) = high.solve();
      if (!goals.holds(member_active, 0, member_active + outsider_active)) continue;
    }

    BribePlan plan;
    int v = 0;
    for (int i = 0; i < n; ++i) {
      if (!(set >> i & 1)) continue;
      std::vector<PartyId> ranking(m);
      for (int j = 0; j < size; ++j) ranking[m - 1 - member_values[member_pick[v][j]]] = members[j];
      for (std::size_t j = 0; j < outsiders.size(); ++j) {
        ranking[m - 1 - outsider_values[outsider_pick[v][j]]] = outsiders[j];
      }
      PreferenceOrder o(std::move(ranking));
      if (!(o == inst.election.order(i))) plan.replacements.emplace(i, std::move(o));
      ++v;
    }
    plan.total_cost = *plan_cost(inst.costs, mask, inst.election, plan);
    result.optimal_cost = plan.total_cost;
    result.plan = std::move(plan);
    break;
  }
  return result;
}

SolveResult search(const ProblemInstance& inst, Cost bound, const SearchBudget& budget) {
  inst.validate();
  const int n = inst.election.num_voters();
  const int m = inst.election.num_parties();
  const bool price_only =
      inst.costs.type() == BriberyType::Unit || inst.costs.type() == BriberyType::Dollar;

  std::vector<VoterClass> classes = group_voters(inst, budget.prune);
  if (factorial_sat(m) <= budget.max_permutations) {
    for (auto& c : classes) {
      c.options = by_scores(enumerate_voter_options(inst, c.voters.front(), budget), inst.rule, bound);
    }
  } else if (inst.rule == ScoringRule::Plurality) {
    for (auto& c : classes) {
      c.options = by_scores(plurality_top_options(inst, c.voters.front()), inst.rule, bound);
    }
  } else if (price_only && inst.effective_rho() == 0) {
    return borda_price_subsets(inst, bound, budget);
  } else {
    throw Refusal("no exact search for this variant at " + std::to_string(m) + " parties",
                  mul_sat(factorial_sat(m), static_cast<std::uint64_t>(n)));
  }

  std::uint64_t space = 1;
  for (const auto& c : classes) {
    std::vector<Cost> costs;
    for (const auto& o : c.options) costs.push_back(o.cost);
    space = mul_sat(space, affordable_compositions(costs, c.voters.size(), bound));
  }
  if (space > budget.max_expansions) {
    throw Refusal("search space of " + std::to_string(space) + " exceeds the expansion limit",
                  space);
  }

  ClassSearch s(inst, std::move(classes), bound, budget.prune);
  s.run();
  SolveResult result;
  result.work = s.expansions();
  if (!s.best()) return result;
  BribePlan plan;
  for (const auto& [voter, option] : s.assignment()) {
    if (!(option->order == inst.election.order(voter))) {
      plan.replacements.emplace(voter, option->order);
    }
  }
  plan.total_cost = *plan_cost(inst.costs, inst.coalition_mask(), inst.election, plan);
  if (plan.total_cost != *s.best()) throw std::logic_error("oracle witness cost mismatch");
  result.optimal_cost = plan.total_cost;
  result.plan = std::move(plan);
  return result;
}

}  // namespace

std::vector<VoterOption> enumerate_voter_options(const ProblemInstance& instance, int voter,
                                                 const SearchBudget& budget) {
  const int m = instance.election.num_parties();
  const std::uint64_t perms = factorial_sat(m);
  if (perms > budget.max_permutations) {
    throw Refusal("too many orders to enumerate per voter", perms);
  }
  const PreferenceOrder& before = instance.election.order(voter);
  const CoalitionMask mask = instance.coalition_mask();
  std::vector<PartyId> ranking(m);
  std::iota(ranking.begin(), ranking.end(), 0);
  std::vector<VoterOption> out;
  do {
    PreferenceOrder after(ranking);
    auto cost = bribe_cost(instance.costs, mask, voter, before, after);
    if (cost) out.push_back({std::move(after), *cost});
  } while (std::next_permutation(ranking.begin(), ranking.end()));
  return out;
}

SolveResult oracle_solve(const ProblemInstance& instance, const SearchBudget& budget) {
  SolveResult r = search(instance, kInfiniteCost, budget);
  r.feasible = r.optimal_cost && *r.optimal_cost <= instance.budget;
  return r;
}

SolveResult solve_np_hard(const ProblemInstance& instance, const SearchBudget& budget) {
  SolveResult r = search(instance, instance.budget, budget);
  r.feasible = r.optimal_cost.has_value();
  return r;
}

}  // namespace coalbribe::oracle
