#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "afsa_wsn/afsa.hpp"
#include "afsa_wsn/clustering.hpp"
#include "afsa_wsn/network.hpp"

namespace afsa_wsn {

struct ModAfsaParams {
  int population_multiplier = 10;  // fish per cluster head
  int try_number = 5;
  double v_fraction = 0.4;         // visual = v_fraction * distance to bulletin
  double s_fraction = 0.5;         // step = s_fraction * visual
  double p1 = 0.3;                 // bulletin jump probability
  double p2 = 0.3;                 // head recenter probability
  int convergence_window = 20;
  int max_iterations = 100;

  std::vector<std::string> violations() const;
};

struct VisualStep {
  double visual = 0.0;
  double step = 0.0;
};

/// Per-fish perception shrinking with the fish's distance to the bulletin.
VisualStep adaptive_visual_step(std::span<const double> position,
                                const Bulletin& bulletin,
                                const ModAfsaParams& params);

/// Behavior settings for one fish: its adaptive visual and step with no
/// crowd factor, so swarm and follow moves depend on fitness alone.
MoveSettings modified_move_settings(VisualStep vs, const ModAfsaParams& params);

/// x + (bulletin - x) * u. Negative u pushes away from the bulletin.
std::vector<double> jump_relative(std::span<const double> position,
                                  std::span<const double> bulletin_position,
                                  double u);

/// With probability p1 applies `jump_relative` with u ~ U[-1, 1], clamped to
/// `bounds`; otherwise returns the position unchanged.
std::vector<double> bulletin_jump(std::span<const double> position,
                                  const Bulletin& bulletin, double p1,
                                  const Bounds& bounds, Rng& rng);

/// Moves head `head` to the centroid of the alive nodes nearest to it among
/// the packed heads. Unchanged when that head owns no nodes.
std::vector<double> recenter_head(std::span<const double> position,
                                  std::span<const NodeState> alive_nodes,
                                  std::size_t head);

/// With probability p2 recenters one uniformly chosen head.
std::vector<double> head_recenter(std::span<const double> position,
                                  std::span<const NodeState> alive_nodes,
                                  double p2, Rng& rng);

/// Modified fish swarm clustering over the alive nodes: adaptive visual and
/// step, crowd-free swarm/follow, bulletin jumps, head recentering, and
/// energy-guarded snapping of the bulletin heads onto distinct nodes.
ClusteringRun run_clusterer(std::span<const NodeState> alive_nodes,
                            const NetworkConfig& cfg,
                            const ModAfsaParams& params, std::uint64_t seed);

}  // namespace afsa_wsn
