#include "klima/solvers.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <exception>
#include <limits>
#include <mutex>
#include <thread>

namespace klima {

namespace {

struct NamedHeuristic {
  const char* name;
  Heuristic heuristic;
  NoiseDistribution noise;
};

constexpr NamedHeuristic kNames[] = {
    {"gsat", Heuristic::Gsat, NoiseDistribution::None},
    {"walksat", Heuristic::WalkSat, NoiseDistribution::None},
    {"walksat-skc", Heuristic::WalkSatSkc, NoiseDistribution::None},
    {"gwsat", Heuristic::Gwsat, NoiseDistribution::None},
    {"mnsat", Heuristic::Mnsat, NoiseDistribution::Uniform},
    {"mnsat-n", Heuristic::Mnsat, NoiseDistribution::Normal},
    {"gnsat-u", Heuristic::Gnsat, NoiseDistribution::Uniform},
    {"gnsat-n", Heuristic::Gnsat, NoiseDistribution::Normal},
};

void require_unsat(const SearchState& s) {
  if (s.num_unsat() == 0) throw std::logic_error("step called on a satisfied assignment");
}

int pick_violated_clause(StepContext& ctx) {
  const auto& unsat = ctx.state.unsat_clauses();
  return unsat[static_cast<std::size_t>(ctx.rng.below(unsat.size()))];
}

int random_member(StepContext& ctx, int clause) {
  const auto lits = ctx.state.index().clause(clause);
  return lits[static_cast<std::size_t>(ctx.rng.below(lits.size()))].var;
}

template <typename Score>
int best_member(StepContext& ctx, int clause, Score score) {
  const auto lits = ctx.state.index().clause(clause);
  int members[64];
  int scores[64];
  std::vector<int> big_members, big_scores;
  int* m = members;
  int* sc = scores;
  if (lits.size() > 64) {
    big_members.resize(lits.size());
    big_scores.resize(lits.size());
    m = big_members.data();
    sc = big_scores.data();
  }
  for (std::size_t i = 0; i < lits.size(); ++i) {
    m[i] = lits[i].var;
    sc[i] = score(lits[i].var);
  }
  const int winner = wta_select(std::span<const int>(sc, lits.size()), ctx.tie_break, ctx.rng);
  return m[winner];
}

int greedy_in_clause(StepContext& ctx, int clause) {
  return best_member(ctx, clause, [&](int v) { return ctx.state.gain(v); });
}

template <typename Metric>
int noisy_global(StepContext& ctx, Metric metric) {
  const int n = ctx.state.num_vars();
  auto& values = *ctx.scratch;
  values.resize(static_cast<std::size_t>(n));
  const bool noisy = ctx.noise != nullptr && ctx.noise->active();
  for (int j = 0; j < n; ++j) {
    double v = metric(j);
    if (noisy) v += ctx.noise->sample(ctx.rng);
    values[static_cast<std::size_t>(j)] = v;
  }
  return wta_select(std::span<const double>(values), ctx.tie_break, ctx.rng);
}

}  // namespace

void SolverConfig::validate() const {
  if (max_flips < 0) throw std::invalid_argument("max_flips must be nonnegative");
  if (max_tries < 1) throw std::invalid_argument("max_tries must be at least 1");
  if (!(walk_p >= 0.0 && walk_p <= 1.0)) throw std::invalid_argument("walk_p must lie in [0, 1]");
  if (!(gwsat_wp >= 0.0 && gwsat_wp <= 1.0))
    throw std::invalid_argument("gwsat_wp must lie in [0, 1]");
  if (!(noise.relative_sigma >= 0.0)) throw std::invalid_argument("relative sigma must be >= 0");
  if (noise.dac_bits < 1 || noise.dac_bits > 32)
    throw std::invalid_argument("dac_bits must lie in [1, 32]");
  if (noise.gaussian_levels < 2) throw std::invalid_argument("gaussian_levels must be >= 2");
  if (threads < 1) throw std::invalid_argument("threads must be at least 1");
}

void apply_heuristic_name(std::string_view name, SolverConfig& config) {
  for (const auto& n : kNames) {
    if (name == n.name) {
      config.heuristic = n.heuristic;
      config.noise.distribution = n.noise;
      return;
    }
  }
  std::string valid;
  for (const auto& n : kNames) valid += std::string(valid.empty() ? "" : ", ") + n.name;
  throw std::invalid_argument("unknown heuristic '" + std::string(name) + "' (valid: " + valid + ")");
}

std::string heuristic_name(const SolverConfig& config) {
  for (const auto& n : kNames)
    if (n.heuristic == config.heuristic &&
        (!uses_noise(n.heuristic) || n.noise == config.noise.distribution))
      return n.name;
  return config.heuristic == Heuristic::Gnsat ? "gnsat-none" : "mnsat-none";
}

std::vector<std::string> heuristic_names() {
  std::vector<std::string> out;
  for (const auto& n : kNames) out.emplace_back(n.name);
  return out;
}

bool uses_noise(Heuristic h) { return h == Heuristic::Mnsat || h == Heuristic::Gnsat; }

DatapathProfile datapath_profile(const SolverConfig& config) {
  DatapathProfile p;
  p.break_pass = config.heuristic != Heuristic::Mnsat;
  p.comparators_per_ml = p.break_pass ? 2 : 1;
  p.noise = uses_noise(config.heuristic) ? config.noise.distribution : NoiseDistribution::None;
  return p;
}

int RunRecord::solved_count() const {
  return static_cast<int>(
      std::count_if(tries.begin(), tries.end(), [](const TryResult& t) { return t.solved; }));
}

NoiseSource::NoiseSource(const NoiseConfig& config, double sigma)
    : distribution_(config.distribution), sigma_(sigma), dac_bits_(config.dac_bits) {
  if (!(sigma >= 0.0)) throw std::invalid_argument("noise sigma must be nonnegative");
  if (distribution_ == NoiseDistribution::Uniform)
    amplitude_ = sigma_ / quantized_uniform_std(dac_bits_, 1.0);
  else if (distribution_ == NoiseDistribution::Normal)
    gaussian_ = discrete_gaussian_table(config.gaussian_levels, config.gaussian_span);
}

double NoiseSource::sample(Rng& rng) const {
  switch (distribution_) {
    case NoiseDistribution::Uniform: return quantized_uniform_noise(dac_bits_, amplitude_, rng);
    case NoiseDistribution::Normal: return sigma_ * sample_alias(gaussian_, rng);
    case NoiseDistribution::None: break;
  }
  return 0.0;
}

int step_gsat(StepContext& ctx) {
  require_unsat(ctx.state);
  StepContext quiet = ctx;
  quiet.noise = nullptr;
  return noisy_global(quiet, [&](int j) { return double(ctx.state.gain(j)); });
}

int step_gnsat(StepContext& ctx) {
  require_unsat(ctx.state);
  return noisy_global(ctx, [&](int j) { return double(ctx.state.gain(j)); });
}

int step_mnsat(StepContext& ctx) {
  require_unsat(ctx.state);
  return noisy_global(ctx, [&](int j) { return double(ctx.state.make(j)); });
}

int step_walksat(StepContext& ctx, double p) {
  require_unsat(ctx.state);
  const int c = pick_violated_clause(ctx);
  if (ctx.rng.next_unit() > p) return greedy_in_clause(ctx, c);
  return random_member(ctx, c);
}

int step_walksat_skc(StepContext& ctx, double p) {
  require_unsat(ctx.state);
  const int c = pick_violated_clause(ctx);
  int min_break = std::numeric_limits<int>::max();
  for (const Literal& l : ctx.state.index().clause(c)) min_break = std::min(min_break, ctx.state.breaks(l.var));
  if (min_break > 0 && ctx.rng.next_unit() < p) return random_member(ctx, c);
  return best_member(ctx, c, [&](int v) { return -ctx.state.breaks(v); });
}

int step_gwsat(StepContext& ctx, double p, double wp) {
  require_unsat(ctx.state);
  if (ctx.rng.next_unit() < p) return step_gsat(ctx);
  return step_walksat(ctx, wp);
}

LocalSearch::LocalSearch(CnfFormula formula, SolverConfig config)
    : formula_(std::move(formula)),
      config_(std::move(config)),
      index_(formula_),
      noise_(config_.noise, config_.noise.relative_sigma * index_.max_occurrence()),
      profile_(datapath_profile(config_)) {
  config_.validate();
}

int LocalSearch::select(const SearchState& state, Rng& rng, std::vector<double>& scratch) const {
  StepContext ctx{state, rng, config_.tie_break, &noise_, &scratch};
  switch (config_.heuristic) {
    case Heuristic::Gsat: return step_gsat(ctx);
    case Heuristic::WalkSat: return step_walksat(ctx, config_.walk_p);
    case Heuristic::WalkSatSkc: return step_walksat_skc(ctx, config_.walk_p);
    case Heuristic::Gwsat: return step_gwsat(ctx, config_.walk_p, config_.gwsat_wp);
    case Heuristic::Mnsat: return step_mnsat(ctx);
    case Heuristic::Gnsat: return step_gnsat(ctx);
  }
  throw std::logic_error("unhandled heuristic");
}

TryResult LocalSearch::run_try(Rng& rng, const StepObserver& observer) const {
  Assignment x0(static_cast<std::size_t>(formula_.num_vars()));
  for (auto& bit : x0) bit = rng.coin() ? 1 : 0;
  return run_try_from(std::move(x0), rng, observer);
}

TryResult LocalSearch::run_try_from(Assignment x0, Rng& rng, const StepObserver& observer) const {
  SearchState state(index_, std::move(x0));
  std::vector<double> scratch;
  TryResult result;
  ActivityStats& a = result.activity;
  const auto lits = static_cast<std::uint64_t>(index_.total_literals());
  const auto passes = profile_.break_pass ? 2u : 1u;
  const auto comparators =
      static_cast<std::uint64_t>(index_.num_clauses()) * static_cast<std::uint64_t>(profile_.comparators_per_ml);
  const bool noisy = uses_noise(config_.heuristic) && noise_.active();

  std::int64_t t = 0;
  while (state.num_unsat() > 0 && t < config_.max_flips) {
    ++a.iterations;
    a.ml_conducting += static_cast<std::uint64_t>(state.satisfied_literals());
    a.ml_cells += lits;
    a.bl_conducting += static_cast<std::uint64_t>(
        state.violated_slots() + (profile_.break_pass ? state.single_sat_slots() : 0));
    a.bl_cells += lits * passes;
    a.comparator_fires += comparators;
    a.wta_selections += 1;
    a.noise_samples += noisy ? static_cast<std::uint64_t>(index_.num_vars()) : 0;
    a.register_writes += 1;

    const int v = select(state, rng, scratch);
    const int before = state.num_unsat();
    const int m = state.make(v), b = state.breaks(v);
    state.flip(v);
    ++t;
    assert(state.num_unsat() == before - m + b);
    if (observer) observer({t, v, before, m, b, state.num_unsat()}, state);
  }

  result.flips_used = t;
  result.final_unsat = state.num_unsat();
  result.solved = result.final_unsat == 0;
  if (result.solved) {
    if (!satisfies(formula_, state.assignment()))
      throw std::logic_error("search reported a solution that fails evaluation");
    result.solution = state.assignment();
  }
  return result;
}

TryResult run_try(const CnfFormula& formula, const SolverConfig& config, Rng& rng) {
  return LocalSearch(formula, config).run_try(rng);
}

RunRecord run_instance(const CnfFormula& formula, const SolverConfig& config,
                       std::string instance_id) {
  config.validate();
  const LocalSearch engine(formula, config);
  RunRecord record;
  record.instance_id = std::move(instance_id);
  record.config = config;
  record.num_vars = formula.num_vars();
  record.num_clauses = formula.num_clauses();
  record.order = formula.order();
  record.tries.resize(static_cast<std::size_t>(config.max_tries));

  std::atomic<int> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    try {
      for (int i = next++; i < config.max_tries; i = next++) {
        Rng rng(config.seed, static_cast<std::uint64_t>(i));
        record.tries[static_cast<std::size_t>(i)] = engine.run_try(rng);
      }
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next = config.max_tries;
    }
  };
  const int workers = std::min(config.threads, config.max_tries);
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  for (const TryResult& t : record.tries) record.activity += t.activity;
  return record;
}

}  // namespace klima
