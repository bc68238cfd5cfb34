#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "afsa_wsn/afsa.hpp"
#include "afsa_wsn/network.hpp"

namespace afsa_wsn {

/// A continuous head coordinate mapped onto a sensor. `guarded` is true when
/// the node was picked from the above-mean-energy candidates, false when that
/// set was empty and the plain nearest node was used instead.
struct SnapResult {
  int id = -1;
  bool guarded = false;

  bool operator==(const SnapResult&) const = default;
};

/// Result of one clustering search over the current alive set.
struct ClusteringRun {
  ClusterPlan plan;
  std::vector<SnapResult> snaps;
  /// Best continuous fitness after initialization, then after each iteration.
  std::vector<double> history;
  int iterations = 0;
  std::size_t evaluations = 0;
  bool converged = false;
};

double mean_energy(std::span<const NodeState> alive_nodes);

/// Nearest alive node with energy strictly above `mean_energy` (lowest id on
/// ties), falling back to the nearest alive node. Ids in `taken` are never
/// returned. Throws std::invalid_argument when no candidate remains.
SnapResult snap_to_node(Position continuous_head,
                        std::span<const NodeState> alive_nodes,
                        double mean_energy, std::span<const int> taken = {});

/// Snaps every head of a packed coordinate vector in order, excluding ids
/// already taken so the result is always distinct.
std::vector<SnapResult> snap_heads(std::span<const double> head_coords,
                                   std::span<const NodeState> alive_nodes,
                                   double mean_energy);

std::vector<int> snapped_ids(std::span<const SnapResult> snaps);

/// Search box over the field for `heads` packed head coordinates.
Bounds field_bounds(const NetworkConfig& cfg, int heads);

/// Stops a search once the snapped head id set has been identical for
/// `window` consecutive iterations.
class ConvergenceTracker {
 public:
  explicit ConvergenceTracker(int window) : window_(window) {}

  /// Feeds the snapped ids for one iteration; true once converged.
  bool update(std::vector<int> ids);
  int stable_iterations() const { return stable_; }

 private:
  int window_;
  int stable_ = 0;
  std::vector<int> last_;
  bool primed_ = false;
};

/// Wraps the snapped bulletin heads into a finished run.
ClusteringRun finish_run(std::span<const double> best_coords,
                         std::span<const NodeState> alive_nodes);

/// Plan for a network with one survivor: it heads itself.
ClusteringRun sole_survivor_run(const NodeState& node);

}  // namespace afsa_wsn
