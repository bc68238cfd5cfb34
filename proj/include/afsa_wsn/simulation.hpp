#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "afsa_wsn/baselines.hpp"
#include "afsa_wsn/clustering.hpp"
#include "afsa_wsn/modified_afsa.hpp"
#include "afsa_wsn/network.hpp"

namespace afsa_wsn {

enum class Algorithm { kModifiedAfsa, kStandardAfsa, kPso, kLeach };

std::string_view algorithm_name(Algorithm a);
std::optional<Algorithm> parse_algorithm(std::string_view name);
/// "modified-afsa, standard-afsa, pso, leach"
std::string algorithm_names();
inline constexpr Algorithm kAllAlgorithms[] = {
    Algorithm::kModifiedAfsa, Algorithm::kStandardAfsa, Algorithm::kPso, Algorithm::kLeach};

/// Whether the head count is fixed by the cluster fraction (all but LEACH).
bool uses_cluster_count(Algorithm a);

struct AlgorithmParams {
  ModAfsaParams modified_afsa;
  AfsaClusterParams standard_afsa;
  PsoParams pso;
  LeachParams leach;

  std::vector<std::string> violations() const;
};

/// Head-selection strategy driven once per round. Instances carry their own
/// RNG and any cross-round state.
class Clusterer {
 public:
  virtual ~Clusterer() = default;
  /// `nodes` is the full network; `round_index` is 0-based.
  virtual ClusteringRun select(std::span<const NodeState> nodes, int round_index,
                               const NetworkConfig& cfg) = 0;
};

std::unique_ptr<Clusterer> make_clusterer(Algorithm algorithm,
                                          const AlgorithmParams& params,
                                          std::uint64_t seed);

struct HeadAudit {
  int id = -1;
  double energy_before = 0.0;
  /// Picked from a nonempty above-mean candidate set.
  bool guarded = false;
};

struct RoundMetrics {
  int round = 0;
  int alive_count = 0;         // after the round
  double total_energy = 0.0;   // after the round
  double plan_fitness = 0.0;   // intra-cluster distance of the chosen heads
  std::vector<int> head_ids;

  // Audit trail, not serialized to rounds.csv.
  int alive_before = 0;
  double mean_energy_before = 0.0;
  double energy_spent = 0.0;   // sum of per-node deltas
  std::vector<HeadAudit> heads;
  int search_iterations = 0;
};

struct RunResult {
  std::optional<int> fnd;
  std::optional<int> lnd;
  std::vector<RoundMetrics> rounds;
  std::uint64_t seed = 0;
  double initial_energy = 0.0;
  /// Best continuous fitness trace of every round's search.
  std::vector<std::vector<double>> search_histories;
};

/// Layout and algorithm seeds derived from one user-facing seed.
struct RunSeeds {
  std::uint64_t layout = 0;
  std::uint64_t algorithm = 0;

  static RunSeeds from(std::uint64_t seed) { return {seed, seed + 10'000}; }
};

/// Round loop: cluster, charge energy, record, until every node is dead or
/// `cfg.max_rounds` rounds have run.
RunResult run_simulation(const NetworkConfig& cfg, Algorithm algorithm,
                         const AlgorithmParams& params, RunSeeds seeds);

struct Statistic {
  double mean = 0.0;
  double stddev = 0.0;
  int samples = 0;
};

/// Mean and population standard deviation. NaN mean for no samples.
Statistic summarize(std::span<const double> values);

struct AlgorithmSummary {
  Algorithm algorithm{};
  Statistic fnd;
  Statistic lnd;
  /// Mean total residual energy for rounds 0..max_rounds over repetitions.
  std::vector<double> energy_curve;
};

struct ExperimentSummary {
  int repetitions = 0;
  std::vector<AlgorithmSummary> algorithms;
  /// runs[a][r]: algorithm a, repetition r.
  std::vector<std::vector<RunResult>> runs;
};

/// Paired experiment: repetition r uses layout seed base_seed + r and
/// algorithm seed base_seed + 10000 + r for every algorithm. Runs may execute
/// on up to `jobs` threads; results are keyed by repetition.
ExperimentSummary run_experiment(const NetworkConfig& cfg,
                                 std::span<const Algorithm> algorithms,
                                 const AlgorithmParams& params, int repetitions,
                                 std::uint64_t base_seed, int jobs = 1);

/// Total residual energy at round 0..max_rounds, holding the last value after
/// the run ends.
std::vector<double> energy_series(const RunResult& run, int max_rounds);

}  // namespace afsa_wsn
