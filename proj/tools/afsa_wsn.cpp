// Command-line front end: validate configs, run single simulations, and run
// paired multi-algorithm experiments.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "afsa_wsn/config.hpp"
#include "afsa_wsn/report.hpp"
#include "afsa_wsn/simulation.hpp"

namespace fs = std::filesystem;
using namespace afsa_wsn;

namespace {

constexpr int kOk = 0;
constexpr int kRuntimeError = 1;
constexpr int kUsageError = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

ExperimentConfig read_config(const std::string& path) {
  return path.empty() ? parse_config_text("") : load_config(path);
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) throw std::runtime_error("cannot write " + path.string());
}

nlohmann::json manifest(const std::string& command, const ExperimentConfig& cfg,
                        const std::vector<Algorithm>& algorithms,
                        nlohmann::json seeds, nlohmann::json outputs, double seconds) {
  nlohmann::json names = nlohmann::json::array();
  for (auto a : algorithms) names.push_back(algorithm_name(a));
  return {{"tool", "afsa_wsn"},
          {"version", kToolVersion},
          {"command", command},
          {"config", to_json(cfg)},
          {"algorithms", std::move(names)},
          {"seeds", std::move(seeds)},
          {"outputs", std::move(outputs)},
          {"wall_clock_seconds", seconds}};
}

Algorithm require_algorithm(const std::string& name) {
  if (auto a = parse_algorithm(name)) return *a;
  throw UsageError("unknown algorithm '" + name + "'; valid names: " + algorithm_names());
}

double elapsed(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

int cmd_simulate(const std::string& config_path, const std::string& algo,
                 std::uint64_t seed, const fs::path& out_dir) {
  auto start = std::chrono::steady_clock::now();
  auto algorithm = require_algorithm(algo);
  auto cfg = read_config(config_path);
  auto seeds = RunSeeds::from(seed);
  auto run = run_simulation(cfg.network, algorithm, cfg.algorithms, seeds);

  fs::create_directories(out_dir);
  write_file(out_dir / "rounds.csv", rounds_csv(run));
  write_file(out_dir / "result.json", result_json(run, algorithm).dump(2) + "\n");
  write_file(out_dir / "manifest.json",
             manifest("simulate", cfg, {algorithm},
                      {{"seed", seed}, {"layout", seeds.layout}, {"algorithm", seeds.algorithm}},
                      {"rounds.csv", "result.json"}, elapsed(start))
                     .dump(2) + "\n");

  std::cout << algorithm_name(algorithm) << ": fnd="
            << (run.fnd ? std::to_string(*run.fnd) : "none") << " lnd="
            << (run.lnd ? std::to_string(*run.lnd) : "none") << " rounds=" << run.rounds.size()
            << "\n";
  return kOk;
}

int cmd_experiment(const std::string& config_path, const std::vector<std::string>& algos,
                   int reps, std::uint64_t base_seed, int jobs, const fs::path& out_dir) {
  auto start = std::chrono::steady_clock::now();
  if (reps < 1) throw UsageError("--reps must be >= 1");
  if (jobs < 1) throw UsageError("--jobs must be >= 1");
  std::vector<Algorithm> algorithms;
  for (const auto& name : algos) algorithms.push_back(require_algorithm(name));
  if (algorithms.empty()) throw UsageError("--algos must name at least one algorithm");
  auto cfg = read_config(config_path);

  auto summary = run_experiment(cfg.network, algorithms, cfg.algorithms, reps, base_seed, jobs);

  fs::create_directories(out_dir);
  write_file(out_dir / "summary.csv", summary_csv(summary));
  write_file(out_dir / "energy_curve.csv", energy_curve_csv(summary));
  write_file(out_dir / "manifest.json",
             manifest("experiment", cfg, algorithms,
                      {{"base_seed", base_seed},
                       {"repetitions", reps},
                       {"layout", "base_seed + r"},
                       {"algorithm", "base_seed + 10000 + r"}},
                      {"summary.csv", "energy_curve.csv"}, elapsed(start))
                     .dump(2) + "\n");
  std::cout << summary_csv(summary);
  return kOk;
}

int cmd_validate(const std::string& config_path) {
  auto cfg = load_config(config_path);
  std::cout << to_json(cfg).dump(2) << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Wireless sensor network lifetime simulator with swarm-based cluster-head selection"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));

  std::string config_path;
  std::string algo;
  std::vector<std::string> algos;
  std::uint64_t seed = 42;
  int reps = 50;
  int jobs = 1;
  std::string out_dir;

  auto* simulate = app.add_subcommand("simulate", "Run one seeded simulation");
  simulate->add_option("--config", config_path, "JSON config file (defaults when omitted)");
  simulate->add_option("--algo", algo, "One of: " + algorithm_names())->required();
  simulate->add_option("--seed", seed, "Run seed")->capture_default_str();
  simulate->add_option("--out", out_dir, "Output directory")->required();

  auto* experiment = app.add_subcommand("experiment", "Run a paired multi-algorithm experiment");
  experiment->add_option("--config", config_path, "JSON config file (defaults when omitted)");
  experiment->add_option("--algos", algos, "Comma-separated algorithm names")->delimiter(',');
  experiment->add_option("--reps", reps, "Repetitions")->capture_default_str();
  experiment->add_option("--seed", seed, "Base seed")->capture_default_str();
  experiment->add_option("--jobs", jobs, "Worker threads")->capture_default_str();
  experiment->add_option("--out", out_dir, "Output directory")->required();

  auto* validate = app.add_subcommand("validate", "Check a config and print it with defaults filled");
  validate->add_option("--config", config_path, "JSON config file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (simulate->parsed()) return cmd_simulate(config_path, algo, seed, out_dir);
    if (experiment->parsed()) {
      if (algos.empty())
        for (auto a : kAllAlgorithms) algos.emplace_back(algorithm_name(a));
      return cmd_experiment(config_path, algos, reps, seed, jobs, out_dir);
    }
    if (validate->parsed()) return cmd_validate(config_path);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kRuntimeError;
  }
  return kUsageError;
}
