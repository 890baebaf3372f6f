#include "klima/hyperopt.hpp"

#include "klima/metrics.hpp"

namespace klima {

std::uint64_t instance_seed(std::uint64_t master, const std::string& id) {
  return splitmix64(master ^ fnv1a64(id));
}

Knob knob_for(Heuristic h) {
  switch (h) {
    case Heuristic::Mnsat:
    case Heuristic::Gnsat: return Knob::SigmaRel;
    case Heuristic::WalkSat:
    case Heuristic::WalkSatSkc:
    case Heuristic::Gwsat: return Knob::WalkP;
    case Heuristic::Gsat: break;
  }
  return Knob::None;
}

void set_knob(SolverConfig& config, double value) {
  switch (knob_for(config.heuristic)) {
    case Knob::SigmaRel: config.noise.relative_sigma = value; break;
    case Knob::WalkP: config.walk_p = value; break;
    case Knob::None: break;
  }
}

void TuneConfig::validate() const {
  if (!(split_fraction > 0.0 && split_fraction < 1.0))
    throw std::invalid_argument("split_fraction must lie in (0, 1)");
  if (n_noise_samples < 1) throw std::invalid_argument("n_noise_samples must be at least 1");
  if (!(noise_low < noise_high) || noise_low < 0.0)
    throw std::invalid_argument("noise range must satisfy 0 <= low < high");
  if (!(walk_p_low < walk_p_high) || walk_p_low < 0.0 || walk_p_high > 1.0)
    throw std::invalid_argument("walk_p range must satisfy 0 <= low < high <= 1");
  if (tune_max_iters < 1) throw std::invalid_argument("tune_max_iters must be at least 1");
  if (max_tries < 1) throw std::invalid_argument("tuning max_tries must be at least 1");
}

void TunedParams::apply(SolverConfig& config) const {
  set_knob(config, knob_median);
  config.max_flips = max_flips_median;
}

TunedParams tune(const std::vector<NamedFormula>& tune_set, const SolverConfig& base,
                 const TuneConfig& cfg) {
  cfg.validate();
  if (tune_set.empty()) throw std::invalid_argument("tune: empty tuning set");

  TunedParams out;
  out.knob = knob_for(base.heuristic);
  if (out.knob == Knob::None) {
    out.samples = {0.0};
  } else {
    const double lo = out.knob == Knob::SigmaRel ? cfg.noise_low : cfg.walk_p_low;
    const double hi = out.knob == Knob::SigmaRel ? cfg.noise_high : cfg.walk_p_high;
    Rng rng(cfg.seed, 0x7E57);
    for (int i = 0; i < cfg.n_noise_samples; ++i) out.samples.push_back(lo + (hi - lo) * rng.next_unit());
    out.samples.insert(out.samples.end(), cfg.extra_samples.begin(), cfg.extra_samples.end());
  }

  std::vector<double> knobs, flips;
  for (const NamedFormula& inst : tune_set) {
    std::optional<TunedInstance> best;
    for (double sample : out.samples) {
      SolverConfig config = base;
      set_knob(config, sample);
      config.max_flips = cfg.tune_max_iters;
      config.max_tries = cfg.max_tries;
      config.seed = instance_seed(cfg.seed, inst.id);
      const RunRecord record = run_instance(inst.formula, config, inst.id);

      TunePoint point{inst.id, sample, success_probability(record, cfg.tune_max_iters), {}, {}};
      const ItsCurve curve = its_curve(record);
      if (point.success_fraction > 0.0) {
        const OptimalFlips opt = optimal_flips(curve);
        point.max_flips = opt.max_flips;
        point.its = opt.its;
        if (!best || opt.its < best->its) best = TunedInstance{inst.id, sample, opt.max_flips, opt.its};
      }
      out.points.push_back(std::move(point));
    }
    if (best) {
      knobs.push_back(best->knob);
      flips.push_back(static_cast<double>(best->max_flips));
      out.instances.push_back(*best);
    } else {
      out.excluded.push_back(inst.id);
    }
  }
  if (out.instances.empty())
    throw std::runtime_error("tune: no tuning instance was solved at any sampled setting");
  out.knob_median = lower_median(knobs);
  out.max_flips_median = static_cast<std::int64_t>(lower_median(flips));
  return out;
}

}  // namespace klima
