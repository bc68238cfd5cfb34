#pragma once

#include <vector>

namespace afsa_wsn {

/// First-order radio model constants.
struct RadioConstants {
  double e_elec = 50e-9;   // J/bit, transceiver electronics
  double e_amp = 100e-12;  // J/bit/m^2, free-space amplifier
  double e_da = 5e-9;      // J/bit/signal, aggregation at a head
};

double tx_energy(long long bits, double distance, const RadioConstants& rc);
double rx_energy(long long bits, const RadioConstants& rc);
double aggregation_energy(long long bits, long long signals,
                          const RadioConstants& rc);

struct NodeState;
struct ClusterPlan;
struct NetworkConfig;

/// Charges one communication round to `nodes` (indexed by node id):
///   1. every alive node receives the control broadcast,
///   2. each member transmits to its head, which receives it,
///   3. each head aggregates members + 1 signals,
///   4. each head transmits to the base station.
/// Nodes are charged after all phases are costed. A node whose energy drops
/// to zero or below is marked dead with energy clamped to zero, so the returned
/// per-node deltas are the joules actually drawn and always sum to the drop
/// in total network energy.
std::vector<double> apply_round(std::vector<NodeState>& nodes,
                                const ClusterPlan& plan,
                                const NetworkConfig& cfg);

/// Phase sum for every node without touching state.
std::vector<double> round_cost(const std::vector<NodeState>& nodes,
                               const ClusterPlan& plan,
                               const NetworkConfig& cfg);

}  // namespace afsa_wsn
