#ifndef KLIMA_METRICS_HPP
#define KLIMA_METRICS_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "klima/solvers.hpp"

namespace klima {

inline constexpr double kDefaultTargetProbability = 0.99;

/// Fraction of tries that were solved within t flips.
double success_probability(const RunRecord& record, std::int64_t t);

/// Iterations to reach the target success probability by restarting runs of
/// length t: t * ln(1 - P_target) / ln(1 - P). P = 1 gives t. Throws
/// std::domain_error for P outside (0, 1].
double its(double t, double p, double p_target = kDefaultTargetProbability);

/// Exact P(t) and ITS(t) for t = 1..max_flips. Points with P(t) = 0 have no
/// ITS value.
struct ItsCurve {
  double p_target = kDefaultTargetProbability;
  std::vector<double> probability;           // index t-1
  std::vector<std::optional<double>> value;  // index t-1

  std::int64_t max_t() const { return static_cast<std::int64_t>(probability.size()); }
};

ItsCurve its_curve(const RunRecord& record, double p_target = kDefaultTargetProbability);

struct OptimalFlips {
  std::int64_t max_flips = 0;
  double its = 0.0;
};

/// argmin_t ITS(t) over defined points, smallest t on ties. Throws
/// std::domain_error when no point is defined (never solved).
OptimalFlips optimal_flips(const ItsCurve& curve);
/// Same, from a plain list where nullopt marks an undefined point (t = i+1).
OptimalFlips optimal_flips(std::span<const std::optional<double>> its_values);

inline double tts(double its_value, double t_iter) { return its_value * t_iter; }
inline double ets(double its_value, double e_mean) { return its_value * e_mean; }

/// Lower median: element (n-1)/2 of the sorted values. Throws on empty input.
double lower_median(std::vector<double> values);

struct CouplingCounts {
  double klima = 0;  // (2+2)·C·V
  double hnn = 0;    // 2·[V + (k-2)·C]²
};

CouplingCounts coupling_counts(long long num_vars, long long num_clauses, int k);
/// M_HNN / M_KLIMA at clause ratio alpha: (2/4)·[1 + (k-2)α]² / α.
double mapping_advantage(int k, double alpha);

}  // namespace klima

#endif  // KLIMA_METRICS_HPP
