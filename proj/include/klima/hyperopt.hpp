#ifndef KLIMA_HYPEROPT_HPP
#define KLIMA_HYPEROPT_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "klima/cnf.hpp"
#include "klima/rng.hpp"
#include "klima/solvers.hpp"

namespace klima {

struct NamedFormula {
  std::string id;
  CnfFormula formula;
};

/// Stable per-instance seed: splitmix64(master ^ fnv1a64(id)).
std::uint64_t instance_seed(std::uint64_t master, const std::string& id);

/// Deterministic shuffled split into (tune, benchmark). The tune set gets
/// round(fraction * n) items; both sets keep the input's relative order.
template <typename T>
std::pair<std::vector<T>, std::vector<T>> split_instances(const std::vector<T>& items,
                                                          double fraction, std::uint64_t seed) {
  if (items.size() < 2) throw std::invalid_argument("split needs at least two instances");
  if (!(fraction > 0.0 && fraction < 1.0))
    throw std::invalid_argument("split fraction must lie in (0, 1)");
  const auto n = items.size();
  const auto n_tune = static_cast<std::size_t>(std::llround(fraction * static_cast<double>(n)));
  if (n_tune < 1 || n_tune >= n)
    throw std::invalid_argument("split fraction leaves one side empty");

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  Rng rng(seed, 0x5B117);
  for (std::size_t i = n - 1; i > 0; --i) std::swap(order[i], order[rng.below(i + 1)]);
  std::vector<std::size_t> tune_idx(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(n_tune));
  std::sort(tune_idx.begin(), tune_idx.end());

  std::pair<std::vector<T>, std::vector<T>> out;
  std::size_t cursor = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (cursor < tune_idx.size() && tune_idx[cursor] == i) {
      out.first.push_back(items[i]);
      ++cursor;
    } else {
      out.second.push_back(items[i]);
    }
  }
  return out;
}

/// Parameter swept alongside MAX_flips: noise level for MNSAT/GNSAT, walk
/// probability for the WalkSAT family, nothing for GSAT.
enum class Knob { None, SigmaRel, WalkP };
Knob knob_for(Heuristic h);
void set_knob(SolverConfig& config, double value);

struct TuneConfig {
  double split_fraction = 0.2;
  int n_noise_samples = 20;
  double noise_low = 0.01;
  double noise_high = 2.0;
  double walk_p_low = 0.0;
  double walk_p_high = 1.0;
  std::int64_t tune_max_iters = 50000;
  int max_tries = 1000;
  std::uint64_t seed = 1;
  /// Knob values evaluated in addition to the random samples.
  std::vector<double> extra_samples;

  void validate() const;
};

struct TunePoint {
  std::string instance_id;
  double knob = 0.0;
  double success_fraction = 0.0;
  std::optional<std::int64_t> max_flips;
  std::optional<double> its;
};

struct TunedInstance {
  std::string instance_id;
  double knob = 0.0;
  std::int64_t max_flips = 0;
  double its = 0.0;
};

struct TunedParams {
  Knob knob = Knob::None;
  double knob_median = 0.0;
  std::int64_t max_flips_median = 0;
  std::vector<double> samples;
  std::vector<TunedInstance> instances;   // instances solved at some sample
  std::vector<std::string> excluded;      // never solved, left out of the medians
  std::vector<TunePoint> points;          // full grid, instance-major

  void apply(SolverConfig& config) const;
};

/// For every sampled knob value and instance: max_tries tries up to
/// tune_max_iters flips, ITS curve, per-instance argmin over (knob, t).
/// Reports medians of the per-instance optima. `base` supplies the heuristic
/// and every setting that is not tuned.
TunedParams tune(const std::vector<NamedFormula>& tune_set, const SolverConfig& base,
                 const TuneConfig& cfg);

}  // namespace klima

#endif  // KLIMA_HYPEROPT_HPP
