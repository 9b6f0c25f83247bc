#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "coalbribe/harness.hpp"
#include "coalbribe/instance_io.hpp"
#include "coalbribe/reductions.hpp"

using namespace coalbribe;

namespace {

enum Exit { kFeasible = 0, kInfeasible = 1, kInputError = 2, kRefused = 3, kInternal = 4 };

struct SolveFlags {
  std::string path;
  std::string format = "text";
  bool emit_witness = false;
  std::uint64_t max_expansions = oracle::SearchBudget{}.max_expansions;
};

oracle::SearchBudget budget_from(std::uint64_t max_expansions) {
  oracle::SearchBudget budget;
  budget.max_expansions = max_expansions;
  return budget;
}

int run_solve(const SolveFlags& flags, bool use_oracle) {
  ProblemInstance instance = io::read_instance_file(flags.path);
  harness::SolveReport report =
      harness::solve(instance, budget_from(flags.max_expansions), use_oracle);
  auto format = flags.format == "json" ? harness::Format::Json : harness::Format::Text;
  std::cout << harness::format_report(report, instance, format, flags.emit_witness);
  return report.feasible ? kFeasible : kInfeasible;
}

std::optional<BriberyType> parse_type(const std::string& name) {
  if (name == "unit") return BriberyType::Unit;
  if (name == "dollar") return BriberyType::Dollar;
  if (name == "swap") return BriberyType::Swap;
  if (name == "shift") return BriberyType::Shift;
  return std::nullopt;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact solvers for coalition bribery in threshold elections"};
  app.require_subcommand(1);

  SolveFlags solve_flags;
  auto add_solve_flags = [&](CLI::App* cmd) {
    cmd->add_option("instance", solve_flags.path, "Instance file")->required();
    cmd->add_option("--format", solve_flags.format, "Report format")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_flag("--emit-witness", solve_flags.emit_witness, "Print the bribed orders");
    cmd->add_option("--max-expansions", solve_flags.max_expansions,
                    "Search-space limit for the exact search");
  };
  auto* solve = app.add_subcommand("solve", "Solve with the matching polynomial or exact solver");
  add_solve_flags(solve);
  auto* oracle_cmd = app.add_subcommand("oracle", "Least bribe cost by exhaustive search");
  add_solve_flags(oracle_cmd);

  harness::CrossvalOptions cv;
  std::uint64_t cv_expansions = cv.budget.max_expansions;
  auto* crossval = app.add_subcommand("crossval", "Compare polynomial solvers with the oracle");
  crossval->add_option("--seed", cv.seed);
  crossval->add_option("--count", cv.count, "Instances per variant");
  crossval->add_option("--max-voters", cv.max_voters);
  crossval->add_option("--max-parties", cv.max_parties);
  crossval->add_option("--max-price", cv.max_price);
  crossval->add_option("--max-expansions", cv_expansions);
  crossval->add_option("--artifacts", cv.artifact_dir, "Directory for disagreeing instances");

  std::string reduce_kind, reduce_path;
  auto* reduce = app.add_subcommand("reduce", "Emit a reduced instance");
  reduce->add_option("kind", reduce_kind)
      ->required()
      ->check(CLI::IsMember({"x3c-plurality", "x3c-borda", "bisection", "shift-to-swap"}));
  reduce->add_option("source", reduce_path, "Source file")->required();

  std::vector<std::string> bench_paths;
  int repetitions = 5;
  std::uint64_t bench_expansions = oracle::SearchBudget{}.max_expansions;
  auto* bench = app.add_subcommand("bench", "Time solvers on instance files");
  bench->add_option("instances", bench_paths);
  bench->add_option("--repetitions", repetitions)->check(CLI::PositiveNumber);
  bench->add_option("--max-expansions", bench_expansions);

  harness::GenSpec gen_spec;
  std::string gen_rule = "plurality", gen_cost = "unit", gen_out;
  bool gen_cbp = false, gen_threshold = false;
  std::uint64_t gen_seed = 1;
  int gen_count = 1;
  auto* gen = app.add_subcommand("gen", "Generate seeded random instances");
  gen->add_option("--rule", gen_rule)->check(CLI::IsMember({"plurality", "borda"}));
  gen->add_option("--cost", gen_cost)->check(CLI::IsMember({"unit", "dollar", "swap", "shift"}));
  gen->add_flag("--cbp", gen_cbp, "Add a preferred party and ratio target");
  gen->add_flag("--threshold", gen_threshold, "Use a positive threshold");
  gen->add_option("--max-voters", gen_spec.max_voters);
  gen->add_option("--max-parties", gen_spec.max_parties);
  gen->add_option("--max-price", gen_spec.max_price);
  gen->add_option("--seed", gen_seed);
  gen->add_option("--count", gen_count)->check(CLI::NonNegativeNumber);
  gen->add_option("--out", gen_out, "Directory; instances go to stdout when omitted");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }

  try {
    if (solve->parsed()) return run_solve(solve_flags, false);
    if (oracle_cmd->parsed()) return run_solve(solve_flags, true);

    if (crossval->parsed()) {
      cv.budget = budget_from(cv_expansions);
      harness::CrossvalSummary summary = harness::crossval(cv);
      std::cout << harness::format_crossval(summary);
      for (const auto& d : summary.disagreements) {
        if (d.artifact_path.empty()) std::cerr << "# " << d.variant << "\n" << d.instance_text;
      }
      return summary.all_agree() ? 0 : 1;
    }

    if (reduce->parsed()) {
      std::string text = io::read_file(reduce_path);
      ProblemInstance out = [&] {
        if (reduce_kind == "x3c-plurality") {
          return reductions::reduce_x3c_to_plurality_shift_cb(io::parse_exact_cover(text));
        }
        if (reduce_kind == "x3c-borda") {
          return reductions::reduce_x3c_to_borda_unit_cb(io::parse_exact_cover(text));
        }
        if (reduce_kind == "bisection") {
          return reductions::reduce_minbisection_to_borda_swap_cb(io::parse_bisection(text));
        }
        return reductions::shift_to_swap(io::parse_instance(text));
      }();
      std::cout << io::serialize_instance(out);
      return 0;
    }

    if (bench->parsed()) {
      std::vector<harness::BenchRow> rows;
      for (const auto& path : bench_paths) {
        rows.push_back(harness::bench(path, io::read_instance_file(path), repetitions,
                                      budget_from(bench_expansions)));
      }
      std::cout << harness::format_bench(rows);
      return 0;
    }

    if (gen->parsed()) {
      gen_spec.rule = gen_rule == "borda" ? ScoringRule::Borda : ScoringRule::Plurality;
      gen_spec.type = *parse_type(gen_cost);
      gen_spec.cbp = gen_cbp;
      gen_spec.zero_threshold = !gen_threshold;
      harness::SplitMix64 rng(gen_seed);
      if (!gen_out.empty()) std::filesystem::create_directories(gen_out);
      for (int k = 0; k < gen_count; ++k) {
        std::string text = io::serialize_instance(harness::generate_instance(rng, gen_spec));
        if (gen_out.empty()) {
          std::cout << (k ? "\n" : "") << text;
        } else {
          std::ofstream(std::filesystem::path(gen_out) /
                        ("instance_" + std::to_string(k + 1) + ".txt"))
              << text;
        }
      }
      return 0;
    }
  } catch (const oracle::Refusal& e) {
    std::cerr << "refused: " << e.what() << " (required " << e.required() << ")\n";
    return kRefused;
  } catch (const io::ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::domain_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
