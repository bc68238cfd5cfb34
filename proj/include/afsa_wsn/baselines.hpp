#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "afsa_wsn/afsa.hpp"
#include "afsa_wsn/clustering.hpp"
#include "afsa_wsn/network.hpp"

namespace afsa_wsn {

// ---------------------------------------------------------------- LEACH

struct LeachParams {
  double head_probability = 0.05;
  /// Rounds per rotation epoch; 0 means round(1 / head_probability).
  int epoch_length = 0;

  int epoch() const;
  std::vector<std::string> violations() const;
};

/// Which nodes already served as head in the current epoch.
struct LeachRotation {
  std::vector<bool> served;
  int epoch_index = -1;
};

/// T(n) = p / (1 - p * (r mod epoch)) for a node still eligible this epoch.
double leach_threshold(double p, int round_index, int epoch);

/// Distributed LEACH election. Every eligible alive node draws in id order;
/// if nobody is elected one eligible node (or any alive node, when the epoch
/// is exhausted) is forced to head.
ClusterPlan leach_select(std::span<const NodeState> nodes, int round_index,
                         const LeachParams& params, Rng& rng,
                         LeachRotation& rotation);

// ---------------------------------------------------------------- PSO

enum class InertiaRule {
  kProduct,  // w = 0.5 * (rand * 0.5)
  kOffset,   // w = 0.5 + rand * 0.5
};

struct PsoParams {
  int population_multiplier = 20;  // particles per cluster head
  double c1 = 2.0;
  double c2 = 2.0;
  InertiaRule inertia = InertiaRule::kProduct;
  int max_iterations = 100;
  int convergence_window = 20;

  std::vector<std::string> violations() const;
};

double draw_inertia(InertiaRule rule, Rng& rng);

struct PsoRun {
  Bulletin gbest;
  /// gbest fitness after initialization, then after each iteration.
  std::vector<double> history;
  int iterations = 0;
  std::size_t evaluations = 0;
};

/// Global-best PSO with zero initial velocity, per-coordinate velocity clamp
/// to the box extent, and positions clamped to the box. Inertia is drawn once
/// per iteration. `params.population_multiplier` is ignored in favour of
/// `population_size`.
PsoRun run_pso(const Objective& objective, const Bounds& bounds,
               int population_size, const PsoParams& params,
               std::uint64_t seed, const StopPredicate& stop = {});

/// PSO over packed head coordinates with the same snap, guard, and
/// convergence rules as the modified fish swarm.
ClusteringRun pso_clusterer(std::span<const NodeState> alive_nodes,
                            const NetworkConfig& cfg, const PsoParams& params,
                            std::uint64_t seed);

// ---------------------------------------------------------------- standard AFSA

struct AfsaClusterParams {
  int population_multiplier = 10;
  double visual = 30.0;
  double step = 6.0;
  int try_number = 5;
  double crowd_factor = 0.75;
  int max_iterations = 100;
  int convergence_window = 20;

  std::vector<std::string> violations() const;
};

ClusteringRun standard_afsa_clusterer(std::span<const NodeState> alive_nodes,
                                      const NetworkConfig& cfg,
                                      const AfsaClusterParams& params,
                                      std::uint64_t seed);

}  // namespace afsa_wsn
