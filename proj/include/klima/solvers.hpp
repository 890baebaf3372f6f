#ifndef KLIMA_SOLVERS_HPP
#define KLIMA_SOLVERS_HPP

#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "klima/cnf.hpp"
#include "klima/energy.hpp"
#include "klima/rng.hpp"
#include "klima/search_state.hpp"

namespace klima {

enum class Heuristic { Gsat, WalkSat, WalkSatSkc, Gwsat, Mnsat, Gnsat };
enum class TieBreak { Random, LowestIndex };

struct NoiseConfig {
  NoiseDistribution distribution = NoiseDistribution::None;
  /// σ_N = relative_sigma * (largest variable occurrence count).
  double relative_sigma = 0.0;
  int dac_bits = 4;
  int gaussian_levels = 64;
  double gaussian_span = 4.0;
};

struct SolverConfig {
  Heuristic heuristic = Heuristic::Gnsat;
  NoiseConfig noise;
  std::int64_t max_flips = 10000;
  int max_tries = 100;
  double walk_p = 0.5;
  double gwsat_wp = 0.5;
  std::uint64_t seed = 1;
  TieBreak tie_break = TieBreak::Random;
  /// Worker threads for run_instance. Results do not depend on it.
  int threads = 1;

  void validate() const;
};

/// Command-line names: gsat, walksat, walksat-skc, gwsat, mnsat, mnsat-n,
/// gnsat-u, gnsat-n. The noisy names also select the noise distribution.
void apply_heuristic_name(std::string_view name, SolverConfig& config);
std::string heuristic_name(const SolverConfig& config);
std::vector<std::string> heuristic_names();
/// True for heuristics whose tuned knob is the noise level (MNSAT, GNSAT).
bool uses_noise(Heuristic h);
/// Peripheral blocks exercised per iteration, for the energy model.
DatapathProfile datapath_profile(const SolverConfig& config);

struct TryResult {
  bool solved = false;
  /// Iteration of first satisfaction, or max_flips when unsolved.
  std::int64_t flips_used = 0;
  int final_unsat = 0;
  /// Satisfying assignment, empty unless solved.
  Assignment solution;
  ActivityStats activity;
};

struct RunRecord {
  std::string instance_id;
  SolverConfig config;
  int num_vars = 0;
  int num_clauses = 0;
  int order = 0;
  std::vector<TryResult> tries;
  ActivityStats activity;

  int solved_count() const;
};

/// Winner-take-all: index of the largest value, ties resolved uniformly at
/// random or toward the lowest index.
template <typename Scalar>
int wta_select(std::span<const Scalar> values, TieBreak tie_break, Rng& rng) {
  if (values.empty()) throw std::invalid_argument("wta_select: empty input");
  int best = 0;
  std::uint64_t ties = 1;
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i] > values[static_cast<std::size_t>(best)]) {
      best = static_cast<int>(i);
      ties = 1;
    } else if (values[i] == values[static_cast<std::size_t>(best)] &&
               tie_break == TieBreak::Random) {
      if (rng.below(++ties) == 0) best = static_cast<int>(i);
    }
  }
  return best;
}

/// Noise injected on the gradient lines before the WTA.
class NoiseSource {
 public:
  NoiseSource(const NoiseConfig& config, double sigma);

  bool active() const { return distribution_ != NoiseDistribution::None && sigma_ > 0.0; }
  double sigma() const { return sigma_; }
  double sample(Rng& rng) const;

 private:
  NoiseDistribution distribution_;
  double sigma_;
  int dac_bits_;
  double amplitude_ = 0.0;
  AliasTable gaussian_;
};

struct StepContext {
  const SearchState& state;
  Rng& rng;
  TieBreak tie_break = TieBreak::Random;
  const NoiseSource* noise = nullptr;
  std::vector<double>* scratch = nullptr;
};

// Each step returns the variable to flip and leaves the state untouched.
// All require at least one violated clause.
int step_gsat(StepContext& ctx);
int step_gnsat(StepContext& ctx);
int step_mnsat(StepContext& ctx);
int step_walksat(StepContext& ctx, double p);
int step_walksat_skc(StepContext& ctx, double p);
int step_gwsat(StepContext& ctx, double p, double wp);

struct StepEvent {
  std::int64_t t = 0;  // iteration index after the flip
  int var = 0;
  int unsat_before = 0;
  int make = 0;
  int brk = 0;
  int unsat_after = 0;
};
using StepObserver = std::function<void(const StepEvent&, const SearchState&)>;

/// Prepared solver for one formula: clause index and noise tables are built
/// once and shared read-only by all tries.
class LocalSearch {
 public:
  LocalSearch(CnfFormula formula, SolverConfig config);

  const CnfFormula& formula() const { return formula_; }
  const SolverConfig& config() const { return config_; }
  const ClauseIndex& index() const { return index_; }
  const NoiseSource& noise() const { return noise_; }

  /// Random initial assignment from `rng`, then iterate until satisfied or
  /// max_flips flips have been made.
  TryResult run_try(Rng& rng, const StepObserver& observer = {}) const;
  TryResult run_try_from(Assignment x0, Rng& rng, const StepObserver& observer = {}) const;

  int select(const SearchState& state, Rng& rng, std::vector<double>& scratch) const;

 private:
  CnfFormula formula_;
  SolverConfig config_;
  ClauseIndex index_;
  NoiseSource noise_;
  DatapathProfile profile_;
};

TryResult run_try(const CnfFormula& formula, const SolverConfig& config, Rng& rng);

/// max_tries independent tries; try i uses Rng(config.seed, i). Tries are
/// spread over config.threads workers.
RunRecord run_instance(const CnfFormula& formula, const SolverConfig& config,
                       std::string instance_id = {});

}  // namespace klima

#endif  // KLIMA_SOLVERS_HPP
