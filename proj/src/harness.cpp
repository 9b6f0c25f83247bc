#include "coalbribe/harness.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "coalbribe/borda.hpp"
#include "coalbribe/instance_io.hpp"
#include "coalbribe/plurality_dp.hpp"
#include "coalbribe/plurality_flow.hpp"

namespace coalbribe::harness {
namespace {

Rational coalition_share(std::span<const Points> points, const ProblemInstance& instance) {
  auto fractions = seat_fractions_from_tallies(points, instance.threshold);
  Rational share{0};
  for (PartyId p : instance.coalition) share += fractions[p];
  return share;
}

std::string type_symbol(BriberyType type) {
  switch (type) {
    case BriberyType::Unit: return "1";
    case BriberyType::Dollar: return "$";
    case BriberyType::Swap: return "swap";
    case BriberyType::Shift: return "shift";
  }
  return "?";
}

std::string format_seconds(double s) {
  std::ostringstream out;
  out.precision(6);
  out << std::fixed << s;
  return out.str();
}

}  // namespace

std::string to_string(Route route) {
  switch (route) {
    case Route::PluralityDp: return "plurality-threshold-dp";
    case Route::PluralityFlow: return "plurality-flow-solver";
    case Route::BordaDp: return "borda-solvers";
    case Route::Oracle: return "oracle-exact";
  }
  return "?";
}

bool is_polynomial(Route route) { return route != Route::Oracle; }

std::string variant_label(ScoringRule rule, bool zero_threshold, bool cbp, BriberyType type) {
  return std::string(rule == ScoringRule::Plurality ? "Plurality" : "Borda") +
         (zero_threshold ? "_0" : "_t") + (cbp ? "-CBP/" : "-CB/") + type_symbol(type);
}

std::string variant_label(const ProblemInstance& instance) {
  return variant_label(instance.rule, instance.threshold == 0, instance.is_cbp(),
                       instance.costs.type());
}

Route dispatch(const ProblemInstance& instance) {
  const bool zero = instance.threshold == 0;
  const bool price = instance.costs.type() == BriberyType::Unit ||
                     instance.costs.type() == BriberyType::Dollar;
  if (instance.rule == ScoringRule::Plurality) {
    if (price) return Route::PluralityDp;
    return zero ? Route::PluralityFlow : Route::Oracle;
  }
  if (zero && instance.costs.type() != BriberyType::Swap) return Route::BordaDp;
  return Route::Oracle;
}

SolveResult run_route(Route route, const ProblemInstance& instance,
                      const oracle::SearchBudget& budget) {
  switch (route) {
    case Route::PluralityDp: return plurality_dp::solve_plurality_t_dollar(instance);
    case Route::PluralityFlow: return plurality_flow::solve_plurality_0(instance);
    case Route::BordaDp: return borda::solve_borda_0(instance);
    case Route::Oracle: return oracle::solve_np_hard(instance, budget);
  }
  throw std::logic_error("unknown route");
}

bool witness_verifies(const ProblemInstance& instance, const BribePlan& plan, Cost cost) {
  auto priced = plan_cost(instance.costs, instance.coalition_mask(), instance.election, plan);
  return priced && *priced == cost && cost <= instance.budget &&
         check_goals(plan.apply(instance.election), instance);
}

SolveReport solve(const ProblemInstance& instance, const oracle::SearchBudget& budget,
                  bool use_oracle) {
  SolveReport report;
  report.variant = variant_label(instance);
  report.route = use_oracle ? Route::Oracle : dispatch(instance);
  report.budget = instance.budget;

  auto start = std::chrono::steady_clock::now();
  SolveResult result = use_oracle ? oracle::oracle_solve(instance, budget)
                                  : run_route(report.route, instance, budget);
  report.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  report.cost = result.optimal_cost;
  report.plan = result.plan;
  report.work = result.work;
  report.feasible = result.feasible;
  if (report.feasible && !witness_verifies(instance, result.plan, *result.optimal_cost)) {
    throw std::logic_error("solver witness failed re-verification on " + report.variant);
  }

  const int m = instance.election.num_parties();
  report.tallies_before = tallies(instance.election.orders(), m, instance.rule);
  report.share_before = coalition_share(report.tallies_before, instance);
  if (result.optimal_cost) {
    report.tallies_after = tallies(result.plan.apply(instance.election), m, instance.rule);
    report.share_after = coalition_share(report.tallies_after, instance);
  }
  return report;
}

std::string format_report(const SolveReport& report, const ProblemInstance& instance,
                          Format format, bool emit_witness) {
  const auto& parties = instance.election.parties();
  const auto& voters = instance.election.voters();
  auto order_names = [&](const PreferenceOrder& o) {
    std::vector<std::string> names;
    for (PartyId p : o.ranking()) names.push_back(parties[p]);
    return names;
  };

  if (format == Format::Json) {
    nlohmann::ordered_json j;
    j["variant"] = report.variant;
    j["route"] = to_string(report.route);
    j["polynomial"] = is_polynomial(report.route);
    j["feasible"] = report.feasible;
    j["cost"] = report.cost ? nlohmann::ordered_json(*report.cost) : nlohmann::ordered_json();
    j["budget"] = report.budget;
    j["work"] = report.work;
    j["seconds"] = report.seconds;
    auto tally_json = [&](const std::vector<Points>& t) {
      nlohmann::ordered_json obj = nlohmann::ordered_json::object();
      for (std::size_t p = 0; p < t.size(); ++p) obj[parties[p]] = t[p];
      return obj;
    };
    j["tallies_before"] = tally_json(report.tallies_before);
    j["coalition_share_before"] = format_rational(report.share_before);
    if (report.cost) {
      j["tallies_after"] = tally_json(report.tallies_after);
      j["coalition_share_after"] = format_rational(report.share_after);
    }
    if (emit_witness && report.cost) {
      nlohmann::ordered_json w = nlohmann::ordered_json::object();
      for (const auto& [v, o] : report.plan.replacements) w[voters[v]] = order_names(o);
      j["witness"] = w;
    }
    return j.dump(2) + "\n";
  }

  std::ostringstream out;
  auto tally_line = [&](const std::vector<Points>& t) {
    std::string s;
    for (std::size_t p = 0; p < t.size(); ++p) {
      s += (p ? " " : "") + parties[p] + "=" + std::to_string(t[p]);
    }
    return s;
  };
  out << "variant: " << report.variant << "\n";
  out << "route: " << to_string(report.route)
      << (is_polynomial(report.route) ? " (polynomial)" : " (exact search)") << "\n";
  out << "feasible: " << (report.feasible ? "yes" : "no") << "\n";
  out << "cost: " << (report.cost ? std::to_string(*report.cost) : "none") << "\n";
  out << "budget: " << report.budget << "\n";
  out << "work: " << report.work << "\n";
  out << "seconds: " << format_seconds(report.seconds) << "\n";
  out << "tallies before: " << tally_line(report.tallies_before) << "\n";
  out << "coalition share before: " << format_rational(report.share_before) << "\n";
  if (report.cost) {
    out << "tallies after: " << tally_line(report.tallies_after) << "\n";
    out << "coalition share after: " << format_rational(report.share_after) << "\n";
  }
  if (emit_witness && report.cost) {
    out << "witness:\n";
    for (const auto& [v, o] : report.plan.replacements) {
      out << "  " << voters[v];
      for (const auto& name : order_names(o)) out << " " << name;
      out << "\n";
    }
  }
  return out.str();
}

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("empty range");
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  for (;;) {
    std::uint64_t x = next();
    if (x < limit) return x % bound;
  }
}

std::int64_t SplitMix64::between(std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

ProblemInstance generate_instance(SplitMix64& rng, const GenSpec& spec) {
  const int m = static_cast<int>(rng.between(2, std::max(2, spec.max_parties)));
  const int n = static_cast<int>(rng.between(1, std::max(1, spec.max_voters)));

  auto shuffled = [&] {
    std::vector<PartyId> perm(m);
    std::iota(perm.begin(), perm.end(), 0);
    for (int k = m - 1; k > 0; --k) std::swap(perm[k], perm[rng.below(k + 1)]);
    return perm;
  };

  std::vector<std::string> parties, voters;
  for (int j = 0; j < m; ++j) parties.push_back("c" + std::to_string(j + 1));
  std::vector<PreferenceOrder> orders;
  for (int i = 0; i < n; ++i) {
    voters.push_back("v" + std::to_string(i + 1));
    orders.emplace_back(shuffled());
  }

  std::vector<PartyId> members = shuffled();
  // At least one outsider, so the seat target is rarely met for free.
  members.resize(static_cast<std::size_t>(rng.between(1, m - 1)));
  std::optional<PartyId> preferred;
  Rational rho{0};
  if (spec.cbp) {
    preferred = members[rng.below(members.size())];
    rho = Rational(rng.between(0, 3), 4);
  }
  Rational threshold = spec.zero_threshold ? Rational(0) : Rational(rng.between(1, 3), 8);
  Rational phi(rng.between(2, 6), 6);

  CostModel costs = CostModel::unit(n);
  switch (spec.type) {
    case BriberyType::Unit:
      break;
    case BriberyType::Dollar: {
      std::vector<Cost> prices;
      for (int i = 0; i < n; ++i) prices.push_back(rng.between(0, spec.max_price));
      costs = CostModel::dollar(std::move(prices));
      break;
    }
    case BriberyType::Swap: {
      std::vector<SwapPrices> prices;
      for (int i = 0; i < n; ++i) {
        SwapPrices sw(m, std::vector<Cost>(m, 0));
        for (int x = 0; x < m; ++x) {
          for (int y = 0; y < m; ++y) {
            if (x != y) sw[x][y] = rng.between(0, spec.max_price);
          }
        }
        prices.push_back(std::move(sw));
      }
      costs = CostModel::swap(std::move(prices));
      break;
    }
    case BriberyType::Shift: {
      std::vector<ShiftTable> tables;
      const int pairs = m * (m - 1) / 2;
      for (int i = 0; i < n; ++i) {
        if (rng.below(2) == 0) {
          tables.push_back(ShiftTable::multiplicative(rng.between(0, spec.max_price), m));
        } else {
          std::vector<Cost> values{0};
          for (int k = 1; k <= pairs; ++k) {
            values.push_back(values.back() + rng.between(0, spec.max_price));
          }
          tables.push_back(ShiftTable::from_values(std::move(values)));
        }
      }
      costs = CostModel::shift(std::move(tables));
      break;
    }
  }
  const Cost budget = rng.between(0, spec.max_price * n);

  ProblemInstance instance{Election(std::move(parties), std::move(voters), std::move(orders)),
                           spec.rule,
                           threshold,
                           std::move(members),
                           preferred,
                           phi,
                           rho,
                           budget,
                           std::move(costs)};
  instance.validate();
  return instance;
}

std::vector<GenSpec> polynomial_variants() {
  std::vector<GenSpec> out;
  for (bool cbp : {false, true}) {
    for (BriberyType t : {BriberyType::Unit, BriberyType::Dollar}) {
      out.push_back({ScoringRule::Plurality, t, cbp, false});
    }
    for (BriberyType t : {BriberyType::Swap, BriberyType::Shift}) {
      out.push_back({ScoringRule::Plurality, t, cbp, true});
    }
    for (BriberyType t : {BriberyType::Unit, BriberyType::Dollar, BriberyType::Shift}) {
      out.push_back({ScoringRule::Borda, t, cbp, true});
    }
  }
  return out;
}

CrossvalSummary crossval(const CrossvalOptions& options) {
  CrossvalSummary summary;
  if (options.count <= 0) return summary;
  auto variants = polynomial_variants();
  for (std::size_t k = 0; k < variants.size(); ++k) {
    GenSpec spec = variants[k];
    spec.max_voters = options.max_voters;
    spec.max_parties = options.max_parties;
    spec.max_price = options.max_price;
    // Separate stream per cell so adding cells never shifts existing streams.
    SplitMix64 rng(options.seed * 0x100000001b3ULL + k);
    CrossvalRow row{variant_label(spec.rule, spec.zero_threshold, spec.cbp, spec.type), 0, 0};
    for (int trial = 0; trial < options.count; ++trial) {
      ProblemInstance instance = generate_instance(rng, spec);
      SolveResult fast = options.solver ? options.solver(instance)
                                        : run_route(dispatch(instance), instance, options.budget);
      SolveResult exact = oracle::oracle_solve(instance, options.budget);
      std::string reason;
      if (fast.optimal_cost != exact.optimal_cost) {
        reason = "optimal cost differs";
      } else if (fast.feasible != exact.feasible) {
        reason = "feasibility differs";
      } else if (fast.optimal_cost) {
        auto priced =
            plan_cost(instance.costs, instance.coalition_mask(), instance.election, fast.plan);
        if (!priced || *priced != *fast.optimal_cost ||
            !check_goals(fast.plan.apply(instance.election), instance)) {
          reason = "witness does not verify";
        }
      }
      ++row.instances;
      if (reason.empty()) {
        ++row.agreed;
        continue;
      }
      Disagreement d{row.variant, io::serialize_instance(instance), fast.optimal_cost,
                     exact.optimal_cost, reason, {}};
      if (!options.artifact_dir.empty()) {
        std::filesystem::create_directories(options.artifact_dir);
        auto path = std::filesystem::path(options.artifact_dir) /
                    ("disagreement_" + std::to_string(summary.disagreements.size() + 1) + ".txt");
        std::ofstream(path) << "# " << row.variant << ": " << reason << "\n" << d.instance_text;
        d.artifact_path = path.string();
      }
      summary.disagreements.push_back(std::move(d));
    }
    summary.rows.push_back(row);
  }
  return summary;
}

std::string format_crossval(const CrossvalSummary& summary) {
  std::ostringstream out;
  out << "variant,instances,agreed\n";
  for (const auto& row : summary.rows) {
    out << row.variant << "," << row.instances << "," << row.agreed << "\n";
  }
  auto show = [](const std::optional<Cost>& c) { return c ? std::to_string(*c) : "none"; };
  for (const auto& d : summary.disagreements) {
    out << "disagreement " << d.variant << ": " << d.reason << " (solver " << show(d.solver_cost)
        << ", oracle " << show(d.oracle_cost) << ")";
    if (!d.artifact_path.empty()) out << " -> " << d.artifact_path;
    out << "\n";
  }
  return out.str();
}

BenchRow bench(const std::string& name, const ProblemInstance& instance, int repetitions,
               const oracle::SearchBudget& budget) {
  BenchRow row;
  row.name = name;
  row.variant = variant_label(instance);
  row.route = dispatch(instance);
  for (int r = 0; r < repetitions; ++r) {
    auto start = std::chrono::steady_clock::now();
    SolveResult result = run_route(row.route, instance, budget);
    row.seconds.push_back(
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
    row.work = result.work;
  }
  if (!row.seconds.empty()) {
    std::vector<double> sorted = row.seconds;
    std::sort(sorted.begin(), sorted.end());
    const std::size_t mid = sorted.size() / 2;
    row.median_seconds =
        sorted.size() % 2 ? sorted[mid] : (sorted[mid - 1] + sorted[mid]) / 2;
  }
  return row;
}

std::string format_bench(const std::vector<BenchRow>& rows) {
  std::ostringstream out;
  out << "instance,variant,route,repetitions,median_seconds,work\n";
  for (const auto& row : rows) {
    out << row.name << "," << row.variant << "," << to_string(row.route) << ","
        << row.seconds.size() << "," << format_seconds(row.median_seconds) << "," << row.work
        << "\n";
  }
  return out.str();
}

}  // namespace coalbribe::harness
