#include <doctest.h>

#include <numeric>
#include <random>

#include "afsa_wsn/energy.hpp"
#include "afsa_wsn/network.hpp"
#include "oracles.hpp"

using namespace afsa_wsn;

namespace {

bool rel(double a, double b, double tol = 1e-15) { return oracle::close_rel(a, b, tol); }

double total(const std::vector<NodeState>& nodes) {
  double t = 0;
  for (const auto& n : nodes) t += n.energy;
  return t;
}

}  // namespace

TEST_SUITE("energy") {

TEST_CASE("transmit energy") {
  RadioConstants rc;
  CHECK(rel(tx_energy(4000, 0, rc), 2.0e-4));
  CHECK(rel(tx_energy(4000, 100, rc), 4.2e-3));
  CHECK(rel(tx_energy(1, 0, rc), 5.0e-8));
  CHECK(tx_energy(4000, 10, rc) < tx_energy(4000, 11, rc));
  CHECK(tx_energy(4000, 10, rc) < tx_energy(4001, 10, rc));
  CHECK_THROWS_AS(tx_energy(0, 1, rc), std::invalid_argument);
  CHECK_THROWS_AS(tx_energy(10, -1, rc), std::invalid_argument);
}

TEST_CASE("receive energy") {
  RadioConstants rc;
  CHECK(rel(rx_energy(4000, rc), 2.0e-4));
  CHECK(rel(rx_energy(1, rc), 5.0e-8));
  for (long long k : {1LL, 7LL, 4000LL, 123456LL}) CHECK(rx_energy(k, rc) == tx_energy(k, 0, rc));
  CHECK_THROWS_AS(rx_energy(0, rc), std::invalid_argument);
}

TEST_CASE("aggregation energy") {
  RadioConstants rc;
  CHECK(rel(aggregation_energy(4000, 1, rc), 2.0e-5));
  CHECK(rel(aggregation_energy(4000, 10, rc), 2.0e-4));
  CHECK_THROWS_AS(aggregation_energy(4000, 0, rc), std::invalid_argument);
  CHECK_THROWS_AS(aggregation_energy(0, 1, rc), std::invalid_argument);
}

TEST_CASE("round charges for a lone self-headed node") {
  NetworkConfig cfg;
  std::vector<NodeState> nodes{{0, {50, 75}, 1.0, true}};
  ClusterPlan plan{{0}, {}};
  auto deltas = apply_round(nodes, plan, cfg);
  double expected = 2.0e-4 + 2.0e-5 + (2.0e-4 + 100e-12 * 4000 * 100.0 * 100.0);
  CHECK(rel(deltas[0], expected, 1e-14));
  CHECK(rel(nodes[0].energy, 1.0 - expected, 1e-14));
}

TEST_CASE("member and head charges") {
  NetworkConfig cfg;
  std::vector<NodeState> nodes{{0, {50, 75}, 1.0, true},
                               {1, {53, 79}, 1.0, true},
                               {2, {50, 65}, 1.0, true}};
  ClusterPlan plan{{0}, {{1, 0}, {2, 0}}};
  auto deltas = apply_round(nodes, plan, cfg);
  CHECK(rel(deltas[1], 2.0e-4 + 2.0e-4 + 4e-7 * 25, 1e-14));
  CHECK(rel(deltas[2], 2.0e-4 + 2.0e-4 + 4e-7 * 100, 1e-14));
  double head = 2.0e-4 + 2 * 2.0e-4 + 3 * 2.0e-5 + 2.0e-4 + 4e-7 * 1e4;
  CHECK(rel(deltas[0], head, 1e-14));
}

TEST_CASE("apply_round rejects plans with dead nodes") {
  NetworkConfig cfg;
  std::vector<NodeState> nodes{{0, {0, 0}, 1.0, true}, {1, {1, 1}, 0.0, false}};
  CHECK_THROWS_AS(apply_round(nodes, ClusterPlan{{1}, {{0, 1}}}, cfg), std::invalid_argument);
  CHECK_THROWS_AS(apply_round(nodes, ClusterPlan{{0}, {{1, 0}}}, cfg), std::invalid_argument);
}

TEST_CASE("deaths flip at round end and energy never goes negative") {
  NetworkConfig cfg;
  std::vector<NodeState> nodes{{0, {50, 50}, 0.05, true}, {1, {52, 50}, 1e-5, true}};
  double before = total(nodes);
  auto deltas = apply_round(nodes, ClusterPlan{{0}, {{1, 0}}}, cfg);
  CHECK_FALSE(nodes[1].alive);
  CHECK(nodes[1].energy == 0.0);
  CHECK(deltas[1] == 1e-5);
  CHECK(nodes[0].alive);  // head still gets charged for the member's packet
  CHECK(rel(before - total(nodes), std::accumulate(deltas.begin(), deltas.end(), 0.0), 1e-12));
}

TEST_CASE("conservation, monotonicity and head dominance on random plans") {
  NetworkConfig cfg;
  std::mt19937 gen(11);
  for (int trial = 0; trial < 100; ++trial) {
    auto nodes = oracle::random_nodes(gen, 40);
    std::uniform_real_distribution<double> e(0.001, 0.05);
    for (auto& n : nodes) n.energy = e(gen);
    auto heads = oracle::distinct_ids(gen, 40, 1 + trial % 5);
    auto plan = assign_members(nodes, heads);
    auto cost = round_cost(nodes, plan, cfg);
    auto before = nodes;
    auto deltas = apply_round(nodes, plan, cfg);

    double sum = std::accumulate(deltas.begin(), deltas.end(), 0.0);
    REQUIRE(oracle::close_rel(total(before) - total(nodes), sum, 1e-12));
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      CHECK(nodes[i].energy <= before[i].energy);
      CHECK(nodes[i].energy >= 0.0);
      CHECK(nodes[i].alive == (nodes[i].energy > 0));
    }
    for (auto [m, h] : plan.membership) {
      const auto& mn = before[static_cast<std::size_t>(m)];
      const auto& hn = before[static_cast<std::size_t>(h)];
      double member_d = euclidean_distance(mn.pos, hn.pos);
      if (member_d <= euclidean_distance(hn.pos, cfg.base_station))
        CHECK(cost[static_cast<std::size_t>(h)] >= tx_energy(cfg.packet_bits, member_d, cfg.radio));
    }
  }
}

}  // TEST_SUITE
