#include "afsa_wsn/simulation.hpp"

#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "afsa_wsn/energy.hpp"

namespace afsa_wsn {

std::string_view algorithm_name(Algorithm a) {
  switch (a) {
    case Algorithm::kModifiedAfsa: return "modified-afsa";
    case Algorithm::kStandardAfsa: return "standard-afsa";
    case Algorithm::kPso: return "pso";
    case Algorithm::kLeach: return "leach";
  }
  return "unknown";
}

std::optional<Algorithm> parse_algorithm(std::string_view name) {
  for (auto a : kAllAlgorithms)
    if (algorithm_name(a) == name) return a;
  return std::nullopt;
}

std::string algorithm_names() {
  std::string out;
  for (auto a : kAllAlgorithms) {
    if (!out.empty()) out += ", ";
    out += algorithm_name(a);
  }
  return out;
}

bool uses_cluster_count(Algorithm a) { return a != Algorithm::kLeach; }

std::vector<std::string> AlgorithmParams::violations() const {
  std::vector<std::string> out;
  auto prefixed = [&out](const char* section, std::vector<std::string> errs) {
    for (auto& e : errs) out.push_back(std::string("algorithms.") + section + "." + e);
  };
  prefixed("modified_afsa", modified_afsa.violations());
  prefixed("standard_afsa", standard_afsa.violations());
  prefixed("pso", pso.violations());
  prefixed("leach", leach.violations());
  return out;
}

namespace {

template <typename Params, typename Search>
class SearchClusterer final : public Clusterer {
 public:
  SearchClusterer(Params params, Search search, std::uint64_t seed)
      : params_(std::move(params)), search_(search), rng_(seed) {}

  ClusteringRun select(std::span<const NodeState> nodes, int,
                       const NetworkConfig& cfg) override {
    return search_(nodes, cfg, params_, rng_.next());
  }

 private:
  Params params_;
  Search search_;
  Rng rng_;
};

template <typename Params, typename Search>
std::unique_ptr<Clusterer> make_search(Params params, Search search, std::uint64_t seed) {
  return std::make_unique<SearchClusterer<Params, Search>>(std::move(params), search, seed);
}

class LeachClusterer final : public Clusterer {
 public:
  LeachClusterer(LeachParams params, std::uint64_t seed) : params_(params), rng_(seed) {}

  ClusteringRun select(std::span<const NodeState> nodes, int round_index,
                       const NetworkConfig&) override {
    ClusteringRun run;
    run.plan = leach_select(nodes, round_index, params_, rng_, rotation_);
    for (int h : run.plan.heads) run.snaps.push_back({h, false});
    return run;
  }

 private:
  LeachParams params_;
  Rng rng_;
  LeachRotation rotation_;
};

double total_energy(std::span<const NodeState> nodes) {
  double total = 0.0;
  for (const auto& n : nodes) total += n.energy;
  return total;
}

int count_alive(std::span<const NodeState> nodes) {
  int alive = 0;
  for (const auto& n : nodes) alive += n.alive ? 1 : 0;
  return alive;
}

}  // namespace

std::unique_ptr<Clusterer> make_clusterer(Algorithm algorithm,
                                          const AlgorithmParams& params,
                                          std::uint64_t seed) {
  switch (algorithm) {
    case Algorithm::kModifiedAfsa:
      return make_search(params.modified_afsa, &run_clusterer, seed);
    case Algorithm::kStandardAfsa:
      return make_search(params.standard_afsa, &standard_afsa_clusterer, seed);
    case Algorithm::kPso:
      return make_search(params.pso, &pso_clusterer, seed);
    case Algorithm::kLeach:
      return std::make_unique<LeachClusterer>(params.leach, seed);
  }
  throw std::invalid_argument("make_clusterer: unknown algorithm");
}

RunResult run_simulation(const NetworkConfig& cfg, Algorithm algorithm,
                         const AlgorithmParams& params, RunSeeds seeds) {
  cfg.validate();
  if (auto errs = params.violations(); !errs.empty())
    throw std::invalid_argument("invalid algorithm params: " + errs.front());

  auto nodes = make_nodes(cfg, seeds.layout);
  auto clusterer = make_clusterer(algorithm, params, seeds.algorithm);

  RunResult result;
  result.seed = seeds.layout;
  result.initial_energy = total_energy(nodes);

  for (int round = 1; round <= cfg.max_rounds; ++round) {
    auto alive = alive_subset(nodes);
    if (alive.empty()) break;

    RoundMetrics m;
    m.round = round;
    m.alive_before = static_cast<int>(alive.size());
    m.mean_energy_before = mean_energy(alive);

    auto search = clusterer->select(nodes, round - 1, cfg);
    m.search_iterations = search.iterations;
    m.head_ids = search.plan.heads;
    for (const auto& s : search.snaps)
      m.heads.push_back({s.id, nodes[static_cast<std::size_t>(s.id)].energy, s.guarded});
    m.plan_fitness = fitness(head_coordinates(nodes, search.plan.heads), alive);

    auto deltas = apply_round(nodes, search.plan, cfg);
    m.energy_spent = std::accumulate(deltas.begin(), deltas.end(), 0.0);
    m.total_energy = total_energy(nodes);
    m.alive_count = count_alive(nodes);

    if (!result.fnd && m.alive_count < cfg.nodes_count) result.fnd = round;
    if (!result.lnd && m.alive_count == 0) result.lnd = round;
    result.rounds.push_back(std::move(m));
    result.search_histories.push_back(std::move(search.history));
    if (result.lnd) break;
  }
  return result;
}

Statistic summarize(std::span<const double> values) {
  Statistic s;
  s.samples = static_cast<int>(values.size());
  if (values.empty()) {
    s.mean = s.stddev = std::numeric_limits<double>::quiet_NaN();
    return s;
  }
  s.mean = std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(values.size());
  double sq = 0.0;
  for (double v : values) sq += (v - s.mean) * (v - s.mean);
  s.stddev = std::sqrt(sq / static_cast<double>(values.size()));
  return s;
}

std::vector<double> energy_series(const RunResult& run, int max_rounds) {
  std::vector<double> series;
  series.reserve(static_cast<std::size_t>(max_rounds) + 1);
  series.push_back(run.initial_energy);
  for (int r = 1; r <= max_rounds; ++r) {
    auto idx = static_cast<std::size_t>(r - 1);
    series.push_back(idx < run.rounds.size() ? run.rounds[idx].total_energy : series.back());
  }
  return series;
}

ExperimentSummary run_experiment(const NetworkConfig& cfg,
                                 std::span<const Algorithm> algorithms,
                                 const AlgorithmParams& params, int repetitions,
                                 std::uint64_t base_seed, int jobs) {
  if (repetitions < 1) throw std::invalid_argument("run_experiment: repetitions must be >= 1");
  cfg.validate();

  ExperimentSummary summary;
  summary.repetitions = repetitions;
  summary.runs.assign(algorithms.size(), std::vector<RunResult>(static_cast<std::size_t>(repetitions)));

  const std::size_t tasks = algorithms.size() * static_cast<std::size_t>(repetitions);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t t = next++; t < tasks; t = next++) {
      std::size_t a = t / static_cast<std::size_t>(repetitions);
      std::size_t r = t % static_cast<std::size_t>(repetitions);
      try {
        RunSeeds seeds{base_seed + r, base_seed + 10'000 + r};
        summary.runs[a][r] = run_simulation(cfg, algorithms[a], params, seeds);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };

  const auto threads = static_cast<std::size_t>(std::max(1, jobs));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t i = 0; i < std::min(threads, tasks); ++i) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  for (std::size_t a = 0; a < algorithms.size(); ++a) {
    AlgorithmSummary s;
    s.algorithm = algorithms[a];
    std::vector<double> fnd, lnd;
    s.energy_curve.assign(static_cast<std::size_t>(cfg.max_rounds) + 1, 0.0);
    for (const auto& run : summary.runs[a]) {
      if (run.fnd) fnd.push_back(*run.fnd);
      if (run.lnd) lnd.push_back(*run.lnd);
      auto series = energy_series(run, cfg.max_rounds);
      for (std::size_t i = 0; i < series.size(); ++i) s.energy_curve[i] += series[i];
    }
    for (auto& e : s.energy_curve) e /= static_cast<double>(repetitions);
    s.fnd = summarize(fnd);
    s.lnd = summarize(lnd);
    summary.algorithms.push_back(std::move(s));
  }
  return summary;
}

}  // namespace afsa_wsn
