#include "afsa_wsn/network.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "afsa_wsn/random.hpp"

namespace afsa_wsn {

std::vector<std::string> NetworkConfig::violations() const {
  std::vector<std::string> out;
  auto check = [&out](bool ok, const char* what) {
    if (!ok) out.emplace_back(what);
  };
  check(std::isfinite(field_width) && field_width > 0,
        "network.field_width must be a positive finite number");
  check(std::isfinite(field_height) && field_height > 0,
        "network.field_height must be a positive finite number");
  check(std::isfinite(base_station.x) && std::isfinite(base_station.y),
        "network.base_station must be finite");
  check(nodes_count >= 1, "network.nodes_count must be >= 1");
  check(packet_bits >= 1, "network.packet_bits must be >= 1");
  check(std::isfinite(initial_energy) && initial_energy > 0,
        "network.initial_energy must be > 0");
  check(cluster_fraction > 0 && cluster_fraction <= 1,
        "network.cluster_fraction must be in (0, 1]");
  check(max_rounds >= 1, "network.max_rounds must be >= 1");
  check(radio.e_elec > 0, "energy.e_elec must be > 0");
  check(radio.e_amp > 0, "energy.e_amp must be > 0");
  check(radio.e_da > 0, "energy.e_da must be > 0");
  return out;
}

void NetworkConfig::validate() const {
  auto errs = violations();
  if (errs.empty()) return;
  std::ostringstream msg;
  msg << "invalid network config:";
  for (const auto& e : errs) msg << "\n  " << e;
  throw std::invalid_argument(msg.str());
}

double euclidean_distance(Position a, Position b) {
  return std::hypot(b.x - a.x, b.y - a.y);
}

ClusterPlan assign_members(std::span<const NodeState> alive_nodes,
                           std::span<const int> heads) {
  if (heads.empty()) throw std::invalid_argument("assign_members: no heads");

  std::unordered_map<int, const NodeState*> by_id;
  for (const auto& n : alive_nodes)
    if (n.alive) by_id.emplace(n.id, &n);

  std::vector<int> sorted(heads.begin(), heads.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("assign_members: duplicate head id");

  std::vector<Position> head_pos;
  head_pos.reserve(sorted.size());
  for (int h : sorted) {
    auto it = by_id.find(h);
    if (it == by_id.end())
      throw std::invalid_argument("assign_members: head " + std::to_string(h) +
                                  " is not an alive node");
    head_pos.push_back(it->second->pos);
  }

  ClusterPlan plan;
  plan.heads.assign(heads.begin(), heads.end());
  for (const auto& n : alive_nodes) {
    if (!n.alive || std::binary_search(sorted.begin(), sorted.end(), n.id))
      continue;
    std::size_t best = 0;
    double best_d = std::numeric_limits<double>::infinity();
    for (std::size_t h = 0; h < sorted.size(); ++h) {
      double d = euclidean_distance(n.pos, head_pos[h]);
      if (d < best_d) {
        best_d = d;
        best = h;
      }
    }
    plan.membership.emplace(n.id, sorted[best]);
  }
  return plan;
}

std::size_t nearest_head(std::span<const double> head_coords, Position p) {
  std::size_t best = 0;
  double best_sq = std::numeric_limits<double>::infinity();
  for (std::size_t h = 0; 2 * h + 1 < head_coords.size(); ++h) {
    double dx = head_coords[2 * h] - p.x;
    double dy = head_coords[2 * h + 1] - p.y;
    double sq = dx * dx + dy * dy;
    if (sq < best_sq) {
      best_sq = sq;
      best = h;
    }
  }
  return best;
}

double fitness(std::span<const double> head_coords,
               std::span<const NodeState> alive_nodes) {
  if (head_coords.empty() || head_coords.size() % 2 != 0)
    throw std::invalid_argument(
        "fitness: head vector must have even, nonzero length");
  double total = 0.0;
  for (const auto& n : alive_nodes) {
    if (!n.alive) continue;
    double best_sq = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < head_coords.size(); i += 2) {
      double dx = head_coords[i] - n.pos.x;
      double dy = head_coords[i + 1] - n.pos.y;
      best_sq = std::min(best_sq, dx * dx + dy * dy);
    }
    total += std::sqrt(best_sq);
  }
  return total;
}

int cluster_count(int alive_count, double fraction) {
  if (alive_count < 1) return 1;
  auto n = static_cast<int>(std::floor(fraction * alive_count + 0.5));
  return std::clamp(n, 1, alive_count);
}

std::vector<NodeState> make_nodes(const NetworkConfig& cfg, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<NodeState> nodes(static_cast<std::size_t>(cfg.nodes_count));
  for (int i = 0; i < cfg.nodes_count; ++i) {
    auto& n = nodes[static_cast<std::size_t>(i)];
    n.id = i;
    n.pos.x = rng.uniform(0.0, cfg.field_width);
    n.pos.y = rng.uniform(0.0, cfg.field_height);
    n.energy = cfg.initial_energy;
    n.alive = true;
  }
  return nodes;
}

std::vector<NodeState> alive_subset(std::span<const NodeState> nodes) {
  std::vector<NodeState> out;
  out.reserve(nodes.size());
  for (const auto& n : nodes)
    if (n.alive) out.push_back(n);
  return out;
}

std::vector<double> head_coordinates(std::span<const NodeState> nodes,
                                     std::span<const int> heads) {
  std::vector<double> coords;
  coords.reserve(2 * heads.size());
  for (int h : heads) {
    auto it = std::find_if(nodes.begin(), nodes.end(),
                           [h](const NodeState& n) { return n.id == h; });
    if (it == nodes.end())
      throw std::invalid_argument("head_coordinates: unknown node id " +
                                  std::to_string(h));
    coords.push_back(it->pos.x);
    coords.push_back(it->pos.y);
  }
  return coords;
}

}  // namespace afsa_wsn
