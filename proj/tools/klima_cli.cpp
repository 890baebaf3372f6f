// klima: instance generation, single-instance solving, benchmarks and the
// mapping-advantage table.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "klima/bench.hpp"

namespace {

constexpr int kExitUsage = 2;

struct SolverFlags {
  std::string heuristic = "gnsat-n";
  std::int64_t max_flips = 10000;
  int max_tries = 100;
  std::optional<double> sigma_rel;
  std::optional<double> walk_p;
  std::uint64_t seed = 1;
  int threads = 1;
};

void add_solver_flags(CLI::App* app, SolverFlags& f) {
  app->add_option("--heuristic", f.heuristic, "gsat, walksat, walksat-skc, gwsat, mnsat, mnsat-n, gnsat-u, gnsat-n");
  app->add_option("--max-flips", f.max_flips, "flips per try")->check(CLI::NonNegativeNumber);
  app->add_option("--max-tries", f.max_tries, "independent tries")->check(CLI::PositiveNumber);
  app->add_option("--sigma-rel", f.sigma_rel, "noise std relative to the largest variable occurrence");
  app->add_option("--walk-p", f.walk_p, "random-walk probability for the WalkSAT family");
  app->add_option("--seed", f.seed, "master seed");
  app->add_option("--threads", f.threads, "worker threads")->check(CLI::PositiveNumber);
}

klima::SolverConfig to_config(const SolverFlags& f) {
  klima::SolverConfig c;
  klima::apply_heuristic_name(f.heuristic, c);
  c.max_flips = f.max_flips;
  c.max_tries = f.max_tries;
  if (f.sigma_rel) c.noise.relative_sigma = *f.sigma_rel;
  else if (klima::uses_noise(c.heuristic)) c.noise.relative_sigma = 0.5;
  if (f.walk_p) c.walk_p = *f.walk_p;
  c.seed = f.seed;
  c.threads = f.threads;
  c.validate();
  return c;
}

std::map<int, double> parse_alpha_table(const std::vector<std::string>& items) {
  std::map<int, double> out;
  for (const std::string& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("--alpha expects k=value, got '" + item + "'");
    out[std::stoi(item.substr(0, eq))] = std::stod(item.substr(eq + 1));
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"KLIMA SAT accelerator simulator and benchmark harness"};
  app.require_subcommand(1);

  klima::GeneratorSpec gen;
  std::string gen_out = "instances";
  auto* generate = app.add_subcommand("generate", "write random k-SAT instances in DIMACS format");
  generate->add_option("-V,--vars", gen.num_vars, "variables")->required();
  generate->add_option("-k,--order", gen.k, "literals per clause");
  generate->add_option("--alpha", gen.alpha, "clause ratio C/V");
  generate->add_option("--count", gen.count, "number of instances");
  generate->add_option("--seed", gen.seed, "master seed");
  generate->add_option("--out", gen_out, "output directory");

  SolverFlags solve_flags;
  std::string solve_file, solve_out;
  bool solve_json = false;
  auto* solve = app.add_subcommand("solve", "run one heuristic on a DIMACS file");
  solve->add_option("file", solve_file, "DIMACS CNF file")->required();
  add_solver_flags(solve, solve_flags);
  solve->add_flag("--json", solve_json, "print the JSON result instead of text");
  solve->add_option("--out", solve_out, "also write solve.json into this directory");

  std::string bench_config, bench_out, bench_params;
  std::optional<std::uint64_t> bench_seed;
  std::optional<int> bench_threads;
  auto* bench = app.add_subcommand("benchmark", "tune on a split and benchmark the remaining instances");
  bench->add_option("config", bench_config, "experiment config (JSON)")->required();
  bench->add_option("--out", bench_out, "output directory (overrides the config)");
  bench->add_option("--params", bench_params, "energy parameter file (overrides the config)");
  bench->add_option("--seed", bench_seed, "master seed (overrides the config)");
  bench->add_option("--threads", bench_threads, "worker threads")->check(CLI::PositiveNumber);

  int k_min = 2, k_max = 7, adv_vars = 100;
  std::vector<std::string> adv_alpha;
  std::string adv_out;
  auto* adv = app.add_subcommand("advantage", "coupling-term counts of KLIMA vs a quadratic HNN");
  adv->add_option("--k-min", k_min, "smallest order");
  adv->add_option("--k-max", k_max, "largest order");
  adv->add_option("-V,--vars", adv_vars, "variables used for the absolute counts");
  adv->add_option("--alpha", adv_alpha, "clause ratio per order, k=value (repeatable)");
  adv->add_option("--out", adv_out, "CSV file (default stdout)");

  auto* params = app.add_subcommand("params", "print the default energy parameters as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (*generate) {
      const auto files = klima::cmd_generate(gen, gen_out);
      std::cout << "wrote " << files.size() << " instances and manifest.json to " << gen_out << "\n";
    } else if (*solve) {
      const klima::SolverConfig config = to_config(solve_flags);
      const klima::SolveOutcome outcome = klima::cmd_solve(solve_file, config);
      if (solve_json) std::cout << outcome.json << "\n";
      else klima::print_solve_outcome(outcome, std::cout);
      if (!solve_out.empty()) {
        std::filesystem::create_directories(solve_out);
        std::ofstream(std::filesystem::path(solve_out) / "solve.json") << outcome.json << "\n";
      }
    } else if (*bench) {
      klima::ExperimentConfig config = klima::load_experiment_config(bench_config);
      if (!bench_out.empty()) config.output_dir = bench_out;
      if (!bench_params.empty()) config.energy_params_path = bench_params;
      if (bench_seed) config.seed = *bench_seed;
      if (bench_threads) config.solver.threads = *bench_threads;
      const klima::BenchmarkSummary summary = klima::cmd_benchmark(config);
      for (const auto& h : summary.heuristics) {
        for (const auto& id : h.tuned.excluded)
          std::cerr << "warning: " << h.heuristic << ": tuning instance " << id
                    << " was never solved and is left out of the medians\n";
        std::cout << h.heuristic << ": tuned max_flips " << h.tuned.max_flips_median << ", knob "
                  << h.tuned.knob_median << ", median ITS " << h.median_its << ", median ETS "
                  << h.median_ets << " J\n";
      }
      std::cout << summary.rows.size() << " result rows written to " << config.output_dir.string() << "\n";
    } else if (*adv) {
      const auto rows = klima::cmd_advantage(k_min, k_max, adv_vars, parse_alpha_table(adv_alpha));
      if (adv_out.empty()) {
        klima::write_advantage_csv(rows, std::cout);
      } else {
        std::ofstream out(adv_out);
        if (!out) throw std::runtime_error("cannot write " + adv_out);
        klima::write_advantage_csv(rows, out);
      }
    } else if (*params) {
      std::cout << klima::energy_params_to_json(klima::EnergyParams{}) << "\n";
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
