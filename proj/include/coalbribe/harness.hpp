#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "coalbribe/instance.hpp"
#include "coalbribe/oracle.hpp"
#include "coalbribe/solution.hpp"

namespace coalbribe::harness {

enum class Route { PluralityDp, PluralityFlow, BordaDp, Oracle };

std::string to_string(Route route);
bool is_polynomial(Route route);

/// Complexity-table cell of an instance, e.g. "Plurality_t-CBP/$".
std::string variant_label(ScoringRule rule, bool zero_threshold, bool cbp, BriberyType type);
std::string variant_label(const ProblemInstance& instance);

/// Polynomial solver for the instance's cell, or the exact search otherwise.
Route dispatch(const ProblemInstance& instance);

/// Runs one route. The oracle route answers the decision question only, so its
/// optimal_cost is empty whenever the optimum exceeds the budget.
SolveResult run_route(Route route, const ProblemInstance& instance,
                      const oracle::SearchBudget& budget = {});

/// Plan is admissible, costs `cost`, fits the budget and meets the goals.
bool witness_verifies(const ProblemInstance& instance, const BribePlan& plan, Cost cost);

struct SolveReport {
  std::string variant;
  Route route = Route::Oracle;
  bool feasible = false;
  std::optional<Cost> cost;
  Cost budget = 0;
  BribePlan plan;
  std::uint64_t work = 0;
  double seconds = 0;
  std::vector<Points> tallies_before;
  std::vector<Points> tallies_after;
  Rational share_before{0};
  Rational share_after{0};
};

/// Dispatches (or forces the full-optimum oracle), then re-verifies any
/// witness; throws std::logic_error if a claimed witness fails the check.
SolveReport solve(const ProblemInstance& instance, const oracle::SearchBudget& budget = {},
                  bool use_oracle = false);

enum class Format { Text, Json };

std::string format_report(const SolveReport& report, const ProblemInstance& instance,
                          Format format, bool emit_witness);

/// Counter-based generator: the k-th draw depends only on the seed and k.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  /// Uniform in [0, bound) by rejection; bound must be positive.
  std::uint64_t below(std::uint64_t bound);
  /// Uniform in [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi);

 private:
  std::uint64_t state_;
};

struct GenSpec {
  ScoringRule rule = ScoringRule::Plurality;
  BriberyType type = BriberyType::Unit;
  bool cbp = false;
  bool zero_threshold = true;
  int max_voters = 5;
  int max_parties = 4;
  Cost max_price = 3;
};

ProblemInstance generate_instance(SplitMix64& rng, const GenSpec& spec);

/// The fourteen polynomial cells.
std::vector<GenSpec> polynomial_variants();

using Solver = std::function<SolveResult(const ProblemInstance&)>;

struct CrossvalOptions {
  std::uint64_t seed = 1;
  int count = 100;
  int max_voters = 5;
  int max_parties = 4;
  Cost max_price = 3;
  oracle::SearchBudget budget;
  /// Replaces the dispatched polynomial solver (harness self-test).
  Solver solver;
  /// Where disagreeing instances are written; empty keeps them in memory only.
  std::string artifact_dir;
};

struct CrossvalRow {
  std::string variant;
  int instances = 0;
  int agreed = 0;
};

struct Disagreement {
  std::string variant;
  std::string instance_text;
  std::optional<Cost> solver_cost;
  std::optional<Cost> oracle_cost;
  std::string reason;
  std::string artifact_path;
};

struct CrossvalSummary {
  std::vector<CrossvalRow> rows;
  std::vector<Disagreement> disagreements;
  bool all_agree() const { return disagreements.empty(); }
};

CrossvalSummary crossval(const CrossvalOptions& options);
std::string format_crossval(const CrossvalSummary& summary);

struct BenchRow {
  std::string name;
  std::string variant;
  Route route = Route::Oracle;
  std::vector<double> seconds;
  double median_seconds = 0;
  std::uint64_t work = 0;
};

BenchRow bench(const std::string& name, const ProblemInstance& instance, int repetitions,
               const oracle::SearchBudget& budget = {});
/// Delimited table, one header line plus one line per row.
std::string format_bench(const std::vector<BenchRow>& rows);

}  // namespace coalbribe::harness
