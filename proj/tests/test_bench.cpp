#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "klima/bench.hpp"
#include "support/oracle.hpp"

using namespace klima;
namespace fs = std::filesystem;

namespace {

fs::path fresh_dir(const std::string& name) {
  const fs::path d = fs::temp_directory_path() / ("klima_test_" + name);
  fs::remove_all(d);
  fs::create_directories(d);
  return d;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path write_suite(const std::string& name, int count) {
  const fs::path d = fresh_dir(name);
  for (const auto& nf : oracle::satisfiable_suite(20, 91, count, 11)) {
    std::ofstream(d / (nf.id + ".cnf")) << to_dimacs(nf.formula);
  }
  return d;
}

ExperimentConfig quick_config(const fs::path& instances, const fs::path& out) {
  ExperimentConfig c;
  c.instance_dir = instances;
  c.heuristics = {"gnsat-n"};
  c.solver.max_tries = 20;
  c.tune.n_noise_samples = 3;
  c.tune.tune_max_iters = 2000;
  c.tune.max_tries = 20;
  c.output_dir = out;
  c.seed = 9;
  return c;
}

}  // namespace

TEST(Generate, FilesManifestAndDeterminism) {
  const fs::path d = fresh_dir("gen");
  GeneratorSpec spec;
  spec.num_vars = 20;
  spec.alpha = 4.55;
  spec.count = 3;
  const auto files = cmd_generate(spec, d / "a");
  ASSERT_EQ(files.size(), 3u);
  EXPECT_TRUE(fs::exists(d / "a" / "manifest.json"));
  EXPECT_EQ(files[0].filename(), "k3-v20-c91-0001.cnf");
  const auto manifest = nlohmann::json::parse(slurp(d / "a" / "manifest.json"));
  EXPECT_EQ(manifest["files"].size(), 3u);
  EXPECT_TRUE(manifest["files"][0].contains("seed"));

  cmd_generate(spec, d / "b");
  for (const auto& f : files) EXPECT_EQ(slurp(f), slurp(d / "b" / f.filename()));
  EXPECT_EQ(slurp(d / "a" / "manifest.json"), slurp(d / "b" / "manifest.json"));

  const auto loaded = load_instances(d / "a");
  ASSERT_EQ(loaded.size(), 3u);
  EXPECT_EQ(loaded[0].id, "k3-v20-c91-0001");
  EXPECT_EQ(loaded[2].id, "k3-v20-c91-0003");
}

TEST(Generate, Errors) {
  const fs::path d = fresh_dir("gen_err");
  GeneratorSpec spec;
  spec.num_vars = 2;
  spec.k = 3;
  EXPECT_THROW(cmd_generate(spec, d), std::invalid_argument);
  spec.num_vars = 10;
  std::ofstream(d / "file") << "x";
  EXPECT_THROW(cmd_generate(spec, d / "file" / "sub"), std::runtime_error);
}

TEST(Solve, ToyFileReportsVerifiedAssignment) {
  const fs::path d = fresh_dir("solve");
  std::ofstream(d / "toy.cnf") << "c toy\np cnf 3 3\n1 2 0\n-1 3 0\n-2 -3 0\n";
  SolverConfig c;
  apply_heuristic_name("gnsat-n", c);
  c.noise.relative_sigma = 0.5;
  c.max_tries = 5;
  const SolveOutcome o = cmd_solve(d / "toy.cnf", c);
  ASSERT_TRUE(o.solution.has_value());
  const CnfFormula f = read_dimacs_file(d / "toy.cnf");
  EXPECT_EQ(oracle::count_unsat(f, *o.solution), 0);
  std::ostringstream text;
  print_solve_outcome(o, text);
  EXPECT_EQ(text.str().rfind("SAT\n", 0), 0u);
  const auto j = nlohmann::json::parse(o.json);
  EXPECT_EQ(j["status"], "SAT");
  EXPECT_EQ(j["assignment"].size(), 3u);
}

TEST(Solve, ParseErrorsKeepFileAndLine) {
  const fs::path d = fresh_dir("solve_err");
  std::ofstream(d / "bad.cnf") << "p cnf 2 1\n1 5 0\n";
  try {
    cmd_solve(d / "bad.cnf", SolverConfig{});
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("bad.cnf"), std::string::npos);
    EXPECT_EQ(e.line(), 2);
  }
}

TEST(Config, ParseAndValidate) {
  const fs::path inst = write_suite("cfg_inst", 2);
  const std::string text = R"({
    "instances": {"dir": ")" + inst.string() + R"("},
    "heuristics": ["gnsat-n", "walksat"],
    "solver": {"max_tries": 7, "tie_break": "lowest"},
    "tune": {"noise_range": [0.1, 1.0], "n_noise_samples": 5},
    "output_dir": "out", "seed": 3, "threads": 2
  })";
  const ExperimentConfig c = parse_experiment_config(text, "/base");
  EXPECT_EQ(c.heuristics.size(), 2u);
  EXPECT_EQ(c.solver.max_tries, 7);
  EXPECT_EQ(c.solver.tie_break, TieBreak::LowestIndex);
  EXPECT_EQ(c.solver.threads, 2);
  EXPECT_DOUBLE_EQ(c.tune.noise_low, 0.1);
  EXPECT_EQ(c.tune.seed, 3u);
  EXPECT_EQ(c.output_dir, fs::path("/base/out"));
  EXPECT_NO_THROW(c.validate());

  EXPECT_THROW(parse_experiment_config(R"({"bogus": 1})"), std::invalid_argument);
  EXPECT_THROW(parse_experiment_config(R"({"solver": {"max_flip": 1}})"), std::invalid_argument);
  EXPECT_THROW(parse_experiment_config("{"), std::invalid_argument);
  EXPECT_THROW(parse_experiment_config(R"({"tune": {"noise_range": [1]}})"), std::invalid_argument);

  ExperimentConfig none;
  EXPECT_THROW(none.validate(), std::invalid_argument);
  ExperimentConfig both = c;
  both.generator = GeneratorSpec{};
  EXPECT_THROW(both.validate(), std::invalid_argument);
  ExperimentConfig missing = c;
  missing.instance_dir = "/nonexistent/klima";
  EXPECT_THROW(missing.validate(), std::invalid_argument);
  ExperimentConfig bad_h = c;
  bad_h.heuristics = {"hnn"};
  EXPECT_THROW(bad_h.validate(), std::invalid_argument);
}

TEST(Benchmark, SplitRowsAndOutputs) {
  const fs::path inst = write_suite("bench_inst", 10);
  const fs::path out = fresh_dir("bench_out");
  const BenchmarkSummary s = cmd_benchmark(quick_config(inst, out / "a"));
  EXPECT_EQ(s.tune_ids.size(), 2u);
  EXPECT_EQ(s.benchmark_ids.size(), 8u);
  EXPECT_EQ(s.rows.size(), 8u);
  for (const auto& id : s.tune_ids)
    for (const auto& row : s.rows) ASSERT_NE(row.instance_id, id);

  const std::string csv = slurp(out / "a" / "results.csv");
  EXPECT_EQ(csv.substr(0, csv.find('\n')), results_csv_header());
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 9);
  for (const char* f : {"breakdown.json", "manifest.json", "tuning.json", "tuning.csv"})
    EXPECT_TRUE(fs::exists(out / "a" / f)) << f;

  const auto breakdown = nlohmann::json::parse(slurp(out / "a" / "breakdown.json"));
  for (const auto& [id, b] : breakdown["heuristics"]["gnsat-n"]["instances"].items()) {
    double sum = 0;
    for (const char* k : {"crossbar_tcam", "crossbar_dpe", "comparators", "noise", "wta", "xor_reg", "clock",
                          "leakage"})
      sum += b[k].get<double>();
    EXPECT_NEAR(sum, b["total"].get<double>(), 1e-12 * sum) << id;
  }
  const auto manifest = nlohmann::json::parse(slurp(out / "a" / "manifest.json"));
  EXPECT_EQ(manifest["instances"].size(), 10u);
  EXPECT_EQ(manifest["schema_version"], kResultsSchemaVersion);
}

TEST(Benchmark, ByteIdenticalAcrossRunsAndThreads) {
  const fs::path inst = write_suite("det_inst", 5);
  const fs::path out = fresh_dir("det_out");
  ExperimentConfig c = quick_config(inst, out / "a");
  c.heuristics = {"gnsat-n", "walksat"};
  cmd_benchmark(c);
  c.output_dir = out / "b";
  cmd_benchmark(c);
  c.output_dir = out / "c";
  c.solver.threads = 3;
  cmd_benchmark(c);
  for (const char* f : {"results.csv", "breakdown.json", "tuning.csv", "manifest.json"}) {
    EXPECT_EQ(slurp(out / "a" / f), slurp(out / "b" / f)) << f;
    EXPECT_EQ(slurp(out / "a" / f), slurp(out / "c" / f)) << f;
  }
}

TEST(Benchmark, GeneratedSourceAndEmptySet) {
  const fs::path out = fresh_dir("gen_bench");
  ExperimentConfig c = quick_config(out, out / "res");
  c.instance_dir.reset();
  GeneratorSpec g;
  g.num_vars = 20;
  g.alpha = 3.5;
  g.count = 5;
  c.generator = g;
  const BenchmarkSummary s = cmd_benchmark(c);
  EXPECT_EQ(s.rows.size(), 4u);

  const fs::path empty = fresh_dir("empty_inst");
  EXPECT_THROW(cmd_benchmark(quick_config(empty, out / "x")), std::runtime_error);
}

TEST(Advantage, Rows) {
  const auto rows = cmd_advantage(2, 6, 100, {{3, 4.267}, {5, 4.267}});
  ASSERT_EQ(rows.size(), 5u);
  EXPECT_NEAR(rows[1].sigma, 3.2507, 1e-4);
  EXPECT_DOUBLE_EQ(rows[0].sigma, 0.5 / rows[0].alpha);
  const auto fixed = cmd_advantage(2, 7, 50, {{2, 4}, {3, 4}, {4, 4}, {5, 4}, {6, 4}, {7, 4}});
  for (std::size_t i = 1; i < fixed.size(); ++i) EXPECT_GT(fixed[i].sigma, fixed[i - 1].sigma);
  EXPECT_THROW(cmd_advantage(1, 3, 100), std::invalid_argument);
  EXPECT_THROW(cmd_advantage(2, 3, 100, {{1, 2.0}}), std::invalid_argument);
  std::ostringstream csv;
  write_advantage_csv(rows, csv);
  EXPECT_EQ(csv.str().rfind("k,alpha,sigma,V,C,m_klima,m_hnn\n", 0), 0u);
}
