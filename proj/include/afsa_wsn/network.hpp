#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "afsa_wsn/energy.hpp"

namespace afsa_wsn {

struct Position {
  double x = 0.0;
  double y = 0.0;

  bool operator==(const Position&) const = default;
};

/// One sensor. Its position is fixed for a run; `alive` tracks `energy > 0`
/// at round granularity.
struct NodeState {
  int id = 0;
  Position pos;
  double energy = 0.0;
  bool alive = true;
};

struct NetworkConfig {
  double field_width = 100.0;
  double field_height = 100.0;
  Position base_station{50.0, 175.0};
  int nodes_count = 100;
  int packet_bits = 4000;
  double initial_energy = 0.07;  // J, calibrated so networks die within 100 rounds
  RadioConstants radio;
  double cluster_fraction = 0.05;
  int max_rounds = 100;

  /// Every violated invariant, in field order. Empty when the config is valid.
  std::vector<std::string> violations() const;
  /// Throws std::invalid_argument listing all violations.
  void validate() const;
};

/// Head ids in selection order, and the head each other alive node reports to.
struct ClusterPlan {
  std::vector<int> heads;
  std::map<int, int> membership;

  bool operator==(const ClusterPlan&) const = default;
};

double euclidean_distance(Position a, Position b);

/// Nearest-head assignment over `alive_nodes`. Equidistant heads resolve to
/// the lowest id. Throws std::invalid_argument on an empty head list, or a
/// head id that is duplicated, dead, or absent from `alive_nodes`.
ClusterPlan assign_members(std::span<const NodeState> alive_nodes,
                           std::span<const int> heads);

/// Sum over alive nodes of the distance to the nearest head, where
/// `head_coords` packs heads as (x0, y0, x1, y1, ...). Dead entries are
/// skipped. Throws std::invalid_argument on an empty or odd-length vector.
double fitness(std::span<const double> head_coords,
               std::span<const NodeState> alive_nodes);

/// Index of the head in `head_coords` nearest to `p` (lowest index on ties).
std::size_t nearest_head(std::span<const double> head_coords, Position p);

/// max(1, round-half-up(fraction * alive_count)), capped at alive_count.
int cluster_count(int alive_count, double fraction);

/// Uniform i.i.d. node placement over the field with full initial energy.
std::vector<NodeState> make_nodes(const NetworkConfig& cfg, std::uint64_t seed);

std::vector<NodeState> alive_subset(std::span<const NodeState> nodes);

/// Packs head node positions into the 2n coordinate layout used by `fitness`.
std::vector<double> head_coordinates(std::span<const NodeState> nodes,
                                     std::span<const int> heads);

}  // namespace afsa_wsn
