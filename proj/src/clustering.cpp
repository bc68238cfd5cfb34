#include "afsa_wsn/clustering.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace afsa_wsn {

double mean_energy(std::span<const NodeState> alive_nodes) {
  double total = 0.0;
  std::size_t n = 0;
  for (const auto& node : alive_nodes) {
    if (!node.alive) continue;
    total += node.energy;
    ++n;
  }
  return n == 0 ? 0.0 : total / static_cast<double>(n);
}

SnapResult snap_to_node(Position continuous_head,
                        std::span<const NodeState> alive_nodes,
                        double mean_energy, std::span<const int> taken) {
  auto is_taken = [taken](int id) {
    return std::find(taken.begin(), taken.end(), id) != taken.end();
  };

  const NodeState* guarded = nullptr;
  const NodeState* nearest = nullptr;
  double guarded_d = std::numeric_limits<double>::infinity();
  double nearest_d = std::numeric_limits<double>::infinity();
  auto better = [](double d, const NodeState& n, double best_d, const NodeState* best) {
    return d < best_d || (d == best_d && best && n.id < best->id);
  };

  for (const auto& n : alive_nodes) {
    if (!n.alive || is_taken(n.id)) continue;
    double d = euclidean_distance(continuous_head, n.pos);
    if (better(d, n, nearest_d, nearest)) {
      nearest_d = d;
      nearest = &n;
    }
    if (n.energy > mean_energy && better(d, n, guarded_d, guarded)) {
      guarded_d = d;
      guarded = &n;
    }
  }
  if (guarded) return {guarded->id, true};
  if (nearest) return {nearest->id, false};
  throw std::invalid_argument("snap_to_node: no alive candidate node");
}

std::vector<SnapResult> snap_heads(std::span<const double> head_coords,
                                   std::span<const NodeState> alive_nodes,
                                   double mean_energy) {
  std::vector<SnapResult> snaps;
  std::vector<int> taken;
  snaps.reserve(head_coords.size() / 2);
  for (std::size_t i = 0; i + 1 < head_coords.size(); i += 2) {
    auto s = snap_to_node({head_coords[i], head_coords[i + 1]}, alive_nodes,
                          mean_energy, taken);
    taken.push_back(s.id);
    snaps.push_back(s);
  }
  return snaps;
}

std::vector<int> snapped_ids(std::span<const SnapResult> snaps) {
  std::vector<int> ids;
  ids.reserve(snaps.size());
  for (const auto& s : snaps) ids.push_back(s.id);
  return ids;
}

Bounds field_bounds(const NetworkConfig& cfg, int heads) {
  Bounds b;
  for (int h = 0; h < heads; ++h) {
    b.lower.insert(b.lower.end(), {0.0, 0.0});
    b.upper.insert(b.upper.end(), {cfg.field_width, cfg.field_height});
  }
  return b;
}

bool ConvergenceTracker::update(std::vector<int> ids) {
  std::sort(ids.begin(), ids.end());
  if (primed_ && ids == last_) {
    ++stable_;
  } else {
    stable_ = 0;
    last_ = std::move(ids);
    primed_ = true;
  }
  return stable_ >= window_;
}

ClusteringRun finish_run(std::span<const double> best_coords,
                         std::span<const NodeState> alive_nodes) {
  ClusteringRun run;
  run.snaps = snap_heads(best_coords, alive_nodes, mean_energy(alive_nodes));
  auto ids = snapped_ids(run.snaps);
  run.plan = assign_members(alive_nodes, ids);
  return run;
}

ClusteringRun sole_survivor_run(const NodeState& node) {
  ClusteringRun run;
  run.plan.heads = {node.id};
  run.snaps = {{node.id, false}};
  run.converged = true;
  return run;
}

}  // namespace afsa_wsn
