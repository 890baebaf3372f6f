#include "klima/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace klima {

double success_probability(const RunRecord& record, std::int64_t t) {
  if (t < 1) throw std::invalid_argument("success_probability: t must be at least 1");
  if (record.tries.empty()) return 0.0;
  const auto hits = std::count_if(record.tries.begin(), record.tries.end(),
                                  [t](const TryResult& r) { return r.solved && r.flips_used <= t; });
  return static_cast<double>(hits) / static_cast<double>(record.tries.size());
}

double its(double t, double p, double p_target) {
  if (!(p > 0.0 && p <= 1.0)) throw std::domain_error("ITS needs a success probability in (0, 1]");
  if (!(p_target > 0.0 && p_target < 1.0))
    throw std::domain_error("ITS target probability must lie in (0, 1)");
  if (p == 1.0) return t;
  if (p == p_target) return t;
  return t * std::log1p(-p_target) / std::log1p(-p);
}

ItsCurve its_curve(const RunRecord& record, double p_target) {
  const std::int64_t horizon = record.config.max_flips;
  ItsCurve curve;
  curve.p_target = p_target;
  curve.probability.assign(static_cast<std::size_t>(horizon), 0.0);
  curve.value.assign(static_cast<std::size_t>(horizon), std::nullopt);
  if (horizon == 0 || record.tries.empty()) return curve;

  // first[t] = tries whose first satisfaction happened at iteration t.
  std::vector<std::int64_t> first(static_cast<std::size_t>(horizon) + 1, 0);
  for (const TryResult& r : record.tries)
    if (r.solved) ++first[static_cast<std::size_t>(std::min(r.flips_used, horizon))];

  const double n = static_cast<double>(record.tries.size());
  std::int64_t solved = first[0];
  for (std::int64_t t = 1; t <= horizon; ++t) {
    solved += first[static_cast<std::size_t>(t)];
    const double p = static_cast<double>(solved) / n;
    curve.probability[static_cast<std::size_t>(t - 1)] = p;
    if (p > 0.0) curve.value[static_cast<std::size_t>(t - 1)] = its(static_cast<double>(t), p, p_target);
  }
  return curve;
}

OptimalFlips optimal_flips(std::span<const std::optional<double>> its_values) {
  std::optional<OptimalFlips> best;
  for (std::size_t i = 0; i < its_values.size(); ++i) {
    if (!its_values[i]) continue;
    if (!best || *its_values[i] < best->its)
      best = OptimalFlips{static_cast<std::int64_t>(i) + 1, *its_values[i]};
  }
  if (!best) throw std::domain_error("ITS curve has no defined point (instance never solved)");
  return *best;
}

OptimalFlips optimal_flips(const ItsCurve& curve) { return optimal_flips(curve.value); }

double lower_median(std::vector<double> values) {
  if (values.empty()) throw std::invalid_argument("median of an empty list");
  const auto mid = values.begin() + static_cast<std::ptrdiff_t>((values.size() - 1) / 2);
  std::nth_element(values.begin(), mid, values.end());
  return *mid;
}

CouplingCounts coupling_counts(long long num_vars, long long num_clauses, int k) {
  if (num_vars < 1 || num_clauses < 1 || k < 2)
    throw std::invalid_argument("coupling_counts: need V >= 1, C >= 1, k >= 2");
  const double v = static_cast<double>(num_vars), c = static_cast<double>(num_clauses);
  const double hnn_vars = v + (k - 2) * c;
  return {4.0 * c * v, 2.0 * hnn_vars * hnn_vars};
}

double mapping_advantage(int k, double alpha) {
  if (k < 2) throw std::invalid_argument("mapping_advantage: k must be at least 2");
  if (!(alpha > 0.0)) throw std::invalid_argument("mapping_advantage: alpha must be positive");
  const double base = 1.0 + (k - 2) * alpha;
  return 0.5 * base * base / alpha;
}

}  // namespace klima
