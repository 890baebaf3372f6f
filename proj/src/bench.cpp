#include "klima/bench.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include <json.hpp>

#include "klima/metrics.hpp"

namespace klima {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string fmt_double(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (std::isnan(v)) return "nan";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

// nlohmann serializes non-finite doubles as null; keep the distinction.
json json_double(double v) {
  if (std::isfinite(v)) return v;
  return fmt_double(v);
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

void ensure_dir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir))
    throw std::runtime_error("cannot create directory " + dir.string() +
                             (ec ? ": " + ec.message() : std::string{}));
}

std::string instance_name(const GeneratorSpec& spec, long long clauses, int index) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "k%d-v%d-c%lld-%04d", spec.k, spec.num_vars, clauses, index + 1);
  return buf;
}

std::uint64_t generated_seed(const GeneratorSpec& spec, int index) {
  return derive_state(spec.seed, static_cast<std::uint64_t>(index));
}

void check_generator(const GeneratorSpec& spec) {
  if (spec.k < 1) throw std::invalid_argument("generate: k must be at least 1");
  if (spec.num_vars < spec.k)
    throw std::invalid_argument("generate: V must be at least k (V=" + std::to_string(spec.num_vars) +
                                ", k=" + std::to_string(spec.k) + ")");
  if (!(spec.alpha > 0.0)) throw std::invalid_argument("generate: alpha must be positive");
  if (spec.count < 1) throw std::invalid_argument("generate: count must be at least 1");
}

std::vector<NamedFormula> generate_in_memory(const GeneratorSpec& spec) {
  check_generator(spec);
  std::vector<NamedFormula> out;
  for (int i = 0; i < spec.count; ++i) {
    CnfFormula f = generate_random_ksat(spec.num_vars, spec.k, spec.alpha, generated_seed(spec, i));
    out.push_back({instance_name(spec, f.num_clauses(), i), std::move(f)});
  }
  return out;
}

json generator_json(const GeneratorSpec& spec) {
  return {{"num_vars", spec.num_vars}, {"k", spec.k}, {"alpha", spec.alpha},
          {"count", spec.count}, {"seed", spec.seed}};
}

// Rejects keys outside `allowed` so typos in config files do not pass silently.
void check_keys(const json& obj, std::initializer_list<const char*> allowed, const std::string& where) {
  if (!obj.is_object()) throw std::invalid_argument(where + " must be an object");
  for (const auto& [key, _] : obj.items()) {
    if (std::none_of(allowed.begin(), allowed.end(), [&](const char* a) { return key == a; }))
      throw std::invalid_argument("unknown key '" + key + "' in " + where);
  }
}

template <typename T>
void read_opt(const json& obj, const char* key, T& dst) {
  if (obj.contains(key)) dst = obj.at(key).get<T>();
}

std::pair<double, double> read_range(const json& v, const char* key) {
  if (!v.is_array() || v.size() != 2)
    throw std::invalid_argument(std::string(key) + " must be a [low, high] pair");
  return {v[0].get<double>(), v[1].get<double>()};
}

fs::path resolve(const fs::path& base, const fs::path& p) {
  return p.is_absolute() || base.empty() ? p : base / p;
}

const char* knob_name(Knob k) {
  switch (k) {
    case Knob::SigmaRel: return "sigma_rel";
    case Knob::WalkP: return "walk_p";
    case Knob::None: break;
  }
  return "none";
}

json breakdown_object(const EnergyBreakdown& b) { return json::parse(breakdown_to_json(b)); }

EnergyBreakdown mean_of(const std::vector<EnergyBreakdown>& items) {
  EnergyBreakdown m;
  if (items.empty()) return m;
  for (const EnergyBreakdown& b : items) {
    m.crossbar_tcam += b.crossbar_tcam;
    m.crossbar_dpe += b.crossbar_dpe;
    m.comparators += b.comparators;
    m.noise += b.noise;
    m.wta += b.wta;
    m.xor_reg += b.xor_reg;
    m.clock += b.clock;
    m.leakage += b.leakage;
  }
  const double n = static_cast<double>(items.size());
  m.crossbar_tcam /= n;
  m.crossbar_dpe /= n;
  m.comparators /= n;
  m.noise /= n;
  m.wta /= n;
  m.xor_reg /= n;
  m.clock /= n;
  m.leakage /= n;
  m.total = m.component_sum();
  m.energy_per_cycle = m.total;
  return m;
}

}  // namespace

std::vector<fs::path> cmd_generate(const GeneratorSpec& spec, const fs::path& out_dir) {
  const std::vector<NamedFormula> formulas = generate_in_memory(spec);
  ensure_dir(out_dir);

  std::vector<fs::path> written;
  json files = json::array();
  for (int i = 0; i < spec.count; ++i) {
    const NamedFormula& nf = formulas[static_cast<std::size_t>(i)];
    const fs::path path = out_dir / (nf.id + ".cnf");
    write_text(path, to_dimacs(nf.formula));
    written.push_back(path);
    files.push_back({{"file", path.filename().string()},
                     {"seed", generated_seed(spec, i)},
                     {"num_vars", nf.formula.num_vars()},
                     {"num_clauses", nf.formula.num_clauses()}});
  }
  json manifest = {{"schema_version", kResultsSchemaVersion},
                   {"generator", generator_json(spec)},
                   {"files", files}};
  write_text(out_dir / "manifest.json", manifest.dump(2) + "\n");
  return written;
}

std::vector<NamedFormula> load_instances(const fs::path& dir) {
  if (!fs::is_directory(dir)) throw std::runtime_error("instance directory not found: " + dir.string());
  std::vector<fs::path> paths;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".cnf") paths.push_back(entry.path());
  std::sort(paths.begin(), paths.end(),
            [](const fs::path& a, const fs::path& b) { return a.filename() < b.filename(); });
  std::vector<NamedFormula> out;
  for (const fs::path& p : paths) out.push_back({p.stem().string(), read_dimacs_file(p)});
  return out;
}

SolveOutcome cmd_solve(const fs::path& file, const SolverConfig& config) {
  const CnfFormula formula = read_dimacs_file(file);
  SolveOutcome out;
  out.record = run_instance(formula, config, file.stem().string());

  std::optional<std::size_t> winner;
  std::int64_t total_flips = 0;
  for (std::size_t i = 0; i < out.record.tries.size(); ++i) {
    total_flips += out.record.tries[i].flips_used;
    if (!winner && out.record.tries[i].solved) winner = i;
  }
  if (winner) {
    const TryResult& r = out.record.tries[*winner];
    if (!satisfies(formula, r.solution))
      throw std::logic_error("solver reported an assignment that does not satisfy the formula");
    out.solution = r.solution;
    out.flips = r.flips_used;
  } else {
    out.flips = total_flips;
  }

  json j = {{"instance", out.record.instance_id},
            {"heuristic", heuristic_name(config)},
            {"status", out.solution ? "SAT" : "UNSOLVED"},
            {"num_vars", formula.num_vars()},
            {"num_clauses", formula.num_clauses()},
            {"max_flips", config.max_flips},
            {"max_tries", config.max_tries},
            {"seed", config.seed},
            {"sigma_rel", config.noise.relative_sigma},
            {"solved_tries", out.record.solved_count()},
            {"flips", out.flips}};
  if (winner) {
    j["try"] = *winner;
    json lits = json::array();
    for (int v = 0; v < formula.num_vars(); ++v) lits.push_back((*out.solution)[static_cast<std::size_t>(v)] ? v + 1 : -(v + 1));
    j["assignment"] = lits;
  }
  out.json = j.dump();
  return out;
}

void print_solve_outcome(const SolveOutcome& outcome, std::ostream& out) {
  const RunRecord& r = outcome.record;
  if (!outcome.solution) {
    out << "UNSOLVED\n";
    out << "flips " << outcome.flips << " over " << r.tries.size() << " tries\n";
    return;
  }
  out << "SAT\n";
  out << "flips " << outcome.flips << " (solved " << r.solved_count() << " of " << r.tries.size()
      << " tries)\n";
  out << "v";
  for (std::size_t v = 0; v < outcome.solution->size(); ++v) {
    const long long lit = static_cast<long long>(v) + 1;
    out << ' ' << ((*outcome.solution)[v] ? lit : -lit);
  }
  out << " 0\n";
}

void ExperimentConfig::validate() const {
  if (instance_dir.has_value() == generator.has_value())
    throw std::invalid_argument("config needs exactly one instance source (instances.dir or instances.generate)");
  if (instance_dir && !fs::is_directory(*instance_dir))
    throw std::invalid_argument("instance directory not found: " + instance_dir->string());
  if (generator) check_generator(*generator);
  if (energy_params_path && !fs::is_regular_file(*energy_params_path))
    throw std::invalid_argument("energy parameter file not found: " + energy_params_path->string());
  if (heuristics.empty()) throw std::invalid_argument("config lists no heuristics");
  for (const std::string& h : heuristics) {
    SolverConfig probe = solver;
    apply_heuristic_name(h, probe);
  }
  solver.validate();
  tune.validate();
}

ExperimentConfig parse_experiment_config(const std::string& json_text, const fs::path& base_dir) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("config is not valid JSON: ") + e.what());
  }
  check_keys(root, {"instances", "heuristics", "solver", "tune", "energy_params", "output_dir", "seed", "threads"},
             "config");

  ExperimentConfig cfg;
  try {
    if (root.contains("instances")) {
      const json& src = root.at("instances");
      check_keys(src, {"dir", "generate"}, "instances");
      if (src.contains("dir")) cfg.instance_dir = resolve(base_dir, src.at("dir").get<std::string>());
      if (src.contains("generate")) {
        const json& g = src.at("generate");
        check_keys(g, {"num_vars", "k", "alpha", "count", "seed"}, "instances.generate");
        GeneratorSpec spec;
        read_opt(g, "num_vars", spec.num_vars);
        read_opt(g, "k", spec.k);
        read_opt(g, "alpha", spec.alpha);
        read_opt(g, "count", spec.count);
        read_opt(g, "seed", spec.seed);
        cfg.generator = spec;
      }
    }
    if (root.contains("heuristics")) cfg.heuristics = root.at("heuristics").get<std::vector<std::string>>();

    if (root.contains("solver")) {
      const json& s = root.at("solver");
      check_keys(s, {"max_flips", "max_tries", "walk_p", "gwsat_wp", "sigma_rel", "tie_break", "dac_bits",
                     "gaussian_levels", "gaussian_span"},
                 "solver");
      read_opt(s, "max_flips", cfg.solver.max_flips);
      read_opt(s, "max_tries", cfg.solver.max_tries);
      read_opt(s, "walk_p", cfg.solver.walk_p);
      read_opt(s, "gwsat_wp", cfg.solver.gwsat_wp);
      read_opt(s, "sigma_rel", cfg.solver.noise.relative_sigma);
      read_opt(s, "dac_bits", cfg.solver.noise.dac_bits);
      read_opt(s, "gaussian_levels", cfg.solver.noise.gaussian_levels);
      read_opt(s, "gaussian_span", cfg.solver.noise.gaussian_span);
      if (s.contains("tie_break")) {
        const auto tb = s.at("tie_break").get<std::string>();
        if (tb == "random") cfg.solver.tie_break = TieBreak::Random;
        else if (tb == "lowest") cfg.solver.tie_break = TieBreak::LowestIndex;
        else throw std::invalid_argument("solver.tie_break must be 'random' or 'lowest'");
      }
    }

    if (root.contains("tune")) {
      const json& t = root.at("tune");
      check_keys(t, {"split_fraction", "n_noise_samples", "noise_range", "walk_p_range", "tune_max_iters",
                     "max_tries", "extra_samples"},
                 "tune");
      read_opt(t, "split_fraction", cfg.tune.split_fraction);
      read_opt(t, "n_noise_samples", cfg.tune.n_noise_samples);
      read_opt(t, "tune_max_iters", cfg.tune.tune_max_iters);
      read_opt(t, "max_tries", cfg.tune.max_tries);
      read_opt(t, "extra_samples", cfg.tune.extra_samples);
      if (t.contains("noise_range"))
        std::tie(cfg.tune.noise_low, cfg.tune.noise_high) = read_range(t.at("noise_range"), "tune.noise_range");
      if (t.contains("walk_p_range"))
        std::tie(cfg.tune.walk_p_low, cfg.tune.walk_p_high) = read_range(t.at("walk_p_range"), "tune.walk_p_range");
    }

    if (root.contains("energy_params"))
      cfg.energy_params_path = resolve(base_dir, root.at("energy_params").get<std::string>());
    if (root.contains("output_dir")) cfg.output_dir = resolve(base_dir, root.at("output_dir").get<std::string>());
    read_opt(root, "seed", cfg.seed);
    read_opt(root, "threads", cfg.solver.threads);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("config: ") + e.what());
  }
  cfg.tune.seed = cfg.seed;
  return cfg;
}

ExperimentConfig load_experiment_config(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open config " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_experiment_config(ss.str(), path.parent_path());
}

std::string results_csv_header() {
  return "instance_id,heuristic,V,C,k,seed,max_flips,sigma_rel,median_its,tts_seconds,ets_joules,"
         "energy_per_cycle_joules,success_fraction";
}

std::string format_result_row(const ResultRow& r) {
  std::ostringstream os;
  os << r.instance_id << ',' << r.heuristic << ',' << r.num_vars << ',' << r.num_clauses << ',' << r.k << ','
     << r.seed << ',' << r.max_flips << ',' << fmt_double(r.sigma_rel) << ',' << fmt_double(r.median_its) << ','
     << fmt_double(r.tts_seconds) << ',' << fmt_double(r.ets_joules) << ','
     << fmt_double(r.energy_per_cycle_joules) << ',' << fmt_double(r.success_fraction);
  return os.str();
}

BenchmarkSummary cmd_benchmark(const ExperimentConfig& config) {
  config.validate();
  const EnergyParams params =
      config.energy_params_path ? load_energy_params(*config.energy_params_path) : EnergyParams{};
  const std::vector<NamedFormula> instances =
      config.instance_dir ? load_instances(*config.instance_dir) : generate_in_memory(*config.generator);
  if (instances.empty()) throw std::runtime_error("benchmark: empty instance set");

  TuneConfig tune_cfg = config.tune;
  tune_cfg.seed = config.seed;
  const auto [tune_set, bench_set] = split_instances(instances, tune_cfg.split_fraction, config.seed);

  BenchmarkSummary summary;
  for (const auto& nf : tune_set) summary.tune_ids.push_back(nf.id);
  for (const auto& nf : bench_set) summary.benchmark_ids.push_back(nf.id);
  for (const std::string& id : summary.benchmark_ids)
    if (std::find(summary.tune_ids.begin(), summary.tune_ids.end(), id) != summary.tune_ids.end())
      throw std::logic_error("instance " + id + " is in both the tuning and benchmark sets");

  const double t_iter = latency_per_iteration(params);
  std::string tuning_csv = "heuristic,instance_id,knob,value,success_fraction,max_flips,its\n";

  for (const std::string& name : config.heuristics) {
    SolverConfig base = config.solver;
    apply_heuristic_name(name, base);

    HeuristicSummary hs;
    hs.heuristic = name;
    hs.tuned = tune(tune_set, base, tune_cfg);
    for (const TunePoint& p : hs.tuned.points) {
      tuning_csv += name + ',' + p.instance_id + ',' + knob_name(hs.tuned.knob) + ',' + fmt_double(p.knob) + ',' +
                    fmt_double(p.success_fraction) + ',' + (p.max_flips ? std::to_string(*p.max_flips) : "") +
                    ',' + (p.its ? fmt_double(*p.its) : "") + '\n';
    }

    SolverConfig run_cfg = base;
    hs.tuned.apply(run_cfg);
    std::vector<double> its_values, tts_values, ets_values;
    std::vector<EnergyBreakdown> breakdowns;
    for (const NamedFormula& nf : bench_set) {
      SolverConfig c = run_cfg;
      c.seed = instance_seed(config.seed, nf.id);
      const RunRecord record = run_instance(nf.formula, c, nf.id);

      const double p = c.max_flips >= 1 ? success_probability(record, c.max_flips)
                                        : static_cast<double>(record.solved_count()) /
                                              static_cast<double>(std::max<std::size_t>(1, record.tries.size()));
      const double its_value = p > 0.0 ? its(static_cast<double>(c.max_flips), p)
                                       : std::numeric_limits<double>::infinity();
      const EnergyBreakdown b = iteration_energy(datapath_profile(c), nf.formula.num_clauses(),
                                                 nf.formula.num_vars(), record.activity, params);

      ResultRow row;
      row.instance_id = nf.id;
      row.heuristic = name;
      row.num_vars = nf.formula.num_vars();
      row.num_clauses = nf.formula.num_clauses();
      row.k = nf.formula.order();
      row.seed = c.seed;
      row.max_flips = c.max_flips;
      row.sigma_rel = uses_noise(c.heuristic) ? c.noise.relative_sigma : 0.0;
      row.median_its = its_value;
      row.tts_seconds = tts(its_value, t_iter);
      row.ets_joules = ets(its_value, b.energy_per_cycle);
      row.energy_per_cycle_joules = b.energy_per_cycle;
      row.success_fraction = p;
      summary.rows.push_back(row);

      its_values.push_back(row.median_its);
      tts_values.push_back(row.tts_seconds);
      ets_values.push_back(row.ets_joules);
      breakdowns.push_back(b);
      hs.breakdowns.emplace(nf.id, b);
    }
    hs.median_its = lower_median(its_values);
    hs.median_tts = lower_median(tts_values);
    hs.median_ets = lower_median(ets_values);
    hs.mean_breakdown = mean_of(breakdowns);
    summary.heuristics.push_back(std::move(hs));
  }

  ensure_dir(config.output_dir);

  std::string csv = results_csv_header() + "\n";
  for (const ResultRow& r : summary.rows) csv += format_result_row(r) + "\n";
  write_text(config.output_dir / "results.csv", csv);
  write_text(config.output_dir / "tuning.csv", tuning_csv);

  json breakdown = {{"schema_version", kResultsSchemaVersion}, {"units", "joules per iteration"}};
  json tuning = {{"schema_version", kResultsSchemaVersion}};
  json tuned_summary = json::object();
  for (const HeuristicSummary& hs : summary.heuristics) {
    json per_instance = json::object();
    for (const auto& [id, b] : hs.breakdowns) per_instance[id] = breakdown_object(b);
    breakdown["heuristics"][hs.heuristic] = {{"mean", breakdown_object(hs.mean_breakdown)},
                                             {"instances", per_instance},
                                             {"median_its", json_double(hs.median_its)},
                                             {"median_tts_seconds", json_double(hs.median_tts)},
                                             {"median_ets_joules", json_double(hs.median_ets)}};

    json per_tuned = json::array();
    for (const TunedInstance& ti : hs.tuned.instances)
      per_tuned.push_back({{"instance_id", ti.instance_id}, {"knob", ti.knob}, {"max_flips", ti.max_flips},
                           {"its", ti.its}});
    json points = json::array();
    for (const TunePoint& p : hs.tuned.points) {
      json jp = {{"instance_id", p.instance_id}, {"knob", p.knob}, {"success_fraction", p.success_fraction}};
      jp["max_flips"] = p.max_flips ? json(*p.max_flips) : json(nullptr);
      jp["its"] = p.its ? json(*p.its) : json(nullptr);
      points.push_back(jp);
    }
    json t = {{"knob", knob_name(hs.tuned.knob)},
              {"knob_median", hs.tuned.knob_median},
              {"max_flips_median", hs.tuned.max_flips_median},
              {"samples", hs.tuned.samples},
              {"excluded", hs.tuned.excluded}};
    tuned_summary[hs.heuristic] = t;
    t["instances"] = per_tuned;
    t["points"] = points;
    tuning["heuristics"][hs.heuristic] = t;
  }
  write_text(config.output_dir / "breakdown.json", breakdown.dump(2) + "\n");
  write_text(config.output_dir / "tuning.json", tuning.dump(2) + "\n");

  json inst = json::array();
  const auto role_of = [&](const std::string& id) {
    return std::find(summary.tune_ids.begin(), summary.tune_ids.end(), id) != summary.tune_ids.end() ? "tune"
                                                                                                     : "benchmark";
  };
  for (const NamedFormula& nf : instances)
    inst.push_back({{"id", nf.id}, {"role", role_of(nf.id)}, {"num_vars", nf.formula.num_vars()},
                    {"num_clauses", nf.formula.num_clauses()}, {"k", nf.formula.order()},
                    {"seed", instance_seed(config.seed, nf.id)}});
  json manifest = {
      {"schema_version", kResultsSchemaVersion},
      {"seed", config.seed},
      {"heuristics", config.heuristics},
      {"instance_source", config.generator ? json{{"generate", generator_json(*config.generator)}}
                                           : json{{"dir", config.instance_dir->filename().string()}}},
      {"solver", {{"max_tries", config.solver.max_tries}, {"walk_p", config.solver.walk_p},
                  {"gwsat_wp", config.solver.gwsat_wp},
                  {"tie_break", config.solver.tie_break == TieBreak::Random ? "random" : "lowest"},
                  {"dac_bits", config.solver.noise.dac_bits},
                  {"gaussian_levels", config.solver.noise.gaussian_levels},
                  {"gaussian_span", config.solver.noise.gaussian_span}}},
      {"tune", {{"split_fraction", tune_cfg.split_fraction}, {"n_noise_samples", tune_cfg.n_noise_samples},
                {"noise_range", {tune_cfg.noise_low, tune_cfg.noise_high}},
                {"walk_p_range", {tune_cfg.walk_p_low, tune_cfg.walk_p_high}},
                {"tune_max_iters", tune_cfg.tune_max_iters}, {"max_tries", tune_cfg.max_tries},
                {"extra_samples", tune_cfg.extra_samples}}},
      {"energy_params", json::parse(energy_params_to_json(params))},
      {"tuned", tuned_summary},
      {"instances", inst},
      {"outputs", {"results.csv", "breakdown.json", "tuning.csv", "tuning.json", "manifest.json"}}};
  write_text(config.output_dir / "manifest.json", manifest.dump(2) + "\n");
  return summary;
}

double default_phase_transition(int k) {
  switch (k) {
    case 2: return 1.0;
    case 3: return kPhaseTransition3Sat;
    case 4: return kPhaseTransition4Sat;
    case 5: return 21.117;
    case 6: return 43.37;
    case 7: return 87.79;
    default: break;
  }
  throw std::invalid_argument("no default clause ratio for k=" + std::to_string(k) + "; pass one explicitly");
}

std::vector<AdvantageRow> cmd_advantage(int k_min, int k_max, int num_vars, const std::map<int, double>& alphas) {
  if (k_min < 2) throw std::invalid_argument("advantage: k must be at least 2");
  if (k_max < k_min) throw std::invalid_argument("advantage: k_max must be >= k_min");
  if (num_vars < 1) throw std::invalid_argument("advantage: V must be at least 1");
  for (const auto& [k, a] : alphas)
    if (k < 2) throw std::invalid_argument("advantage: k must be at least 2");

  std::vector<AdvantageRow> rows;
  for (int k = k_min; k <= k_max; ++k) {
    const auto it = alphas.find(k);
    AdvantageRow r;
    r.k = k;
    r.alpha = it != alphas.end() ? it->second : default_phase_transition(k);
    r.sigma = mapping_advantage(k, r.alpha);
    r.num_vars = num_vars;
    r.num_clauses = std::max<long long>(1, std::llround(r.alpha * num_vars));
    const CouplingCounts m = coupling_counts(num_vars, r.num_clauses, k);
    r.m_klima = m.klima;
    r.m_hnn = m.hnn;
    rows.push_back(r);
  }
  return rows;
}

void write_advantage_csv(const std::vector<AdvantageRow>& rows, std::ostream& out) {
  out << "k,alpha,sigma,V,C,m_klima,m_hnn\n";
  for (const AdvantageRow& r : rows)
    out << r.k << ',' << fmt_double(r.alpha) << ',' << fmt_double(r.sigma) << ',' << r.num_vars << ','
        << r.num_clauses << ',' << fmt_double(r.m_klima) << ',' << fmt_double(r.m_hnn) << '\n';
}

}  // namespace klima
