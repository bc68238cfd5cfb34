#include "afsa_wsn/energy.hpp"

#include <stdexcept>
#include <string>

#include "afsa_wsn/network.hpp"

namespace afsa_wsn {

double tx_energy(long long bits, double distance, const RadioConstants& rc) {
  if (bits < 1) throw std::invalid_argument("tx_energy: bits must be >= 1");
  if (!(distance >= 0)) throw std::invalid_argument("tx_energy: negative distance");
  auto k = static_cast<double>(bits);
  return rc.e_elec * k + rc.e_amp * k * distance * distance;
}

double rx_energy(long long bits, const RadioConstants& rc) {
  if (bits < 1) throw std::invalid_argument("rx_energy: bits must be >= 1");
  return rc.e_elec * static_cast<double>(bits);
}

double aggregation_energy(long long bits, long long signals,
                          const RadioConstants& rc) {
  if (bits < 1 || signals < 1)
    throw std::invalid_argument("aggregation_energy: bits and signals must be >= 1");
  return rc.e_da * static_cast<double>(bits) * static_cast<double>(signals);
}

std::vector<double> round_cost(const std::vector<NodeState>& nodes,
                               const ClusterPlan& plan,
                               const NetworkConfig& cfg) {
  const auto& rc = cfg.radio;
  const long long k = cfg.packet_bits;
  auto node_at = [&nodes](int id) -> const NodeState& {
    if (id < 0 || static_cast<std::size_t>(id) >= nodes.size() ||
        nodes[static_cast<std::size_t>(id)].id != id)
      throw std::invalid_argument("apply_round: unknown node id " + std::to_string(id));
    return nodes[static_cast<std::size_t>(id)];
  };

  std::vector<double> cost(nodes.size(), 0.0);
  for (const auto& n : nodes)
    if (n.alive) cost[static_cast<std::size_t>(n.id)] += rx_energy(k, rc);

  std::vector<long long> members_of(nodes.size(), 0);
  for (int h : plan.heads)
    if (!node_at(h).alive)
      throw std::invalid_argument("apply_round: head " + std::to_string(h) + " is dead");

  for (const auto& [member, head] : plan.membership) {
    const auto& m = node_at(member);
    const auto& h = node_at(head);
    if (!m.alive || !h.alive)
      throw std::invalid_argument("apply_round: plan references dead node " +
                                  std::to_string(m.alive ? head : member));
    cost[static_cast<std::size_t>(member)] += tx_energy(k, euclidean_distance(m.pos, h.pos), rc);
    cost[static_cast<std::size_t>(head)] += rx_energy(k, rc);
    ++members_of[static_cast<std::size_t>(head)];
  }

  for (int h : plan.heads) {
    auto idx = static_cast<std::size_t>(h);
    cost[idx] += aggregation_energy(k, members_of[idx] + 1, rc);
    cost[idx] += tx_energy(k, euclidean_distance(nodes[idx].pos, cfg.base_station), rc);
  }
  return cost;
}

std::vector<double> apply_round(std::vector<NodeState>& nodes,
                                const ClusterPlan& plan,
                                const NetworkConfig& cfg) {
  auto deltas = round_cost(nodes, plan, cfg);
  for (auto& n : nodes) {
    auto idx = static_cast<std::size_t>(n.id);
    if (deltas[idx] == 0.0) continue;
    if (deltas[idx] >= n.energy) {
      deltas[idx] = n.energy;
      n.energy = 0.0;
      n.alive = false;
    } else {
      n.energy -= deltas[idx];
    }
  }
  return deltas;
}

}  // namespace afsa_wsn
