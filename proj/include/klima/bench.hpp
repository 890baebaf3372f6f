#ifndef KLIMA_BENCH_HPP
#define KLIMA_BENCH_HPP

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "klima/energy.hpp"
#include "klima/hyperopt.hpp"
#include "klima/solvers.hpp"

namespace klima {

inline constexpr int kResultsSchemaVersion = 1;

struct GeneratorSpec {
  int num_vars = 20;
  int k = 3;
  double alpha = kPhaseTransition3Sat;
  int count = 10;
  std::uint64_t seed = 1;
};

/// Writes `count` instances named k<k>-v<V>-c<C>-<index>.cnf plus
/// manifest.json listing each file's seed. Returns the written paths.
std::vector<std::filesystem::path> cmd_generate(const GeneratorSpec& spec,
                                                const std::filesystem::path& out_dir);

/// Every *.cnf file in `dir`, sorted by file name; ids are the file stems.
std::vector<NamedFormula> load_instances(const std::filesystem::path& dir);

struct SolveOutcome {
  RunRecord record;
  /// Lowest-index solved try, re-verified against the formula.
  std::optional<Assignment> solution;
  std::int64_t flips = 0;
  std::string json;
};

SolveOutcome cmd_solve(const std::filesystem::path& file, const SolverConfig& config);
void print_solve_outcome(const SolveOutcome& outcome, std::ostream& out);

struct ExperimentConfig {
  std::optional<std::filesystem::path> instance_dir;
  std::optional<GeneratorSpec> generator;
  std::vector<std::string> heuristics{"gnsat-n"};
  SolverConfig solver;
  TuneConfig tune;
  std::optional<std::filesystem::path> energy_params_path;
  std::filesystem::path output_dir = "klima-out";
  std::uint64_t seed = 1;

  /// Exactly one instance source; referenced paths exist; sub-configs valid.
  void validate() const;
};

/// JSON config. Relative paths resolve against `base_dir`.
ExperimentConfig parse_experiment_config(const std::string& json_text,
                                         const std::filesystem::path& base_dir = {});
ExperimentConfig load_experiment_config(const std::filesystem::path& path);

struct ResultRow {
  std::string instance_id;
  std::string heuristic;
  int num_vars = 0;
  int num_clauses = 0;
  int k = 0;
  std::uint64_t seed = 0;
  std::int64_t max_flips = 0;
  double sigma_rel = 0.0;
  double median_its = 0.0;  // ITS of this instance at the tuned MAX_flips
  double tts_seconds = 0.0;
  double ets_joules = 0.0;
  double energy_per_cycle_joules = 0.0;
  double success_fraction = 0.0;
};

struct HeuristicSummary {
  std::string heuristic;
  TunedParams tuned;
  double median_its = 0.0;
  double median_tts = 0.0;
  double median_ets = 0.0;
  EnergyBreakdown mean_breakdown;
  std::map<std::string, EnergyBreakdown> breakdowns;
};

struct BenchmarkSummary {
  std::vector<std::string> tune_ids;
  std::vector<std::string> benchmark_ids;
  std::vector<ResultRow> rows;
  std::vector<HeuristicSummary> heuristics;
};

/// Tune on the split, benchmark the remainder, and write results.csv,
/// breakdown.json, tuning.csv and manifest.json into config.output_dir.
BenchmarkSummary cmd_benchmark(const ExperimentConfig& config);

std::string results_csv_header();
std::string format_result_row(const ResultRow& row);

struct AdvantageRow {
  int k = 0;
  double alpha = 0;
  double sigma = 0;
  int num_vars = 0;
  long long num_clauses = 0;
  double m_klima = 0;
  double m_hnn = 0;
};

/// Literature satisfiability thresholds for k = 2..7.
double default_phase_transition(int k);

/// Σ, M_KLIMA and M_HNN for k in [k_min, k_max] at V variables. `alphas`
/// overrides the clause ratio per k; missing entries use the literature
/// thresholds.
std::vector<AdvantageRow> cmd_advantage(int k_min, int k_max, int num_vars,
                                        const std::map<int, double>& alphas = {});
void write_advantage_csv(const std::vector<AdvantageRow>& rows, std::ostream& out);

}  // namespace klima

#endif  // KLIMA_BENCH_HPP
