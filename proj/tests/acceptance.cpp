// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "afsa_wsn/afsa.hpp"
#include "afsa_wsn/energy.hpp"
#include "afsa_wsn/modified_afsa.hpp"
#include "afsa_wsn/network.hpp"
#include "afsa_wsn/report.hpp"
#include "afsa_wsn/simulation.hpp"
#include "oracles.hpp"

using namespace afsa_wsn;

namespace {

struct Verdict {
  bool pass = false;
  std::string detail;
};

int failures = 0;

void report(int id, const std::string& title, const std::function<Verdict()>& check) {
  auto start = std::chrono::steady_clock::now();
  Verdict v;
  try {
    v = check();
  } catch (const std::exception& e) {
    v = {false, std::string("exception: ") + e.what()};
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (!v.pass) ++failures;
  std::printf("criterion %2d %s  %s: %s [%.1fs]\n", id, v.pass ? "PASS" : "FAIL", title.c_str(),
              v.detail.c_str(), secs);
  std::fflush(stdout);
}

double rel_err(double got, double want) { return std::fabs(got - want) / std::fabs(want); }

std::string fmt(double v, int digits = 4) {
  std::ostringstream os;
  os.precision(digits);
  os << v;
  return os.str();
}

Verdict energy_exactness() {
  RadioConstants rc;
  double tx = tx_energy(4000, 100.0, rc);
  double rx = rx_energy(4000, rc);
  double e1 = rel_err(tx, 4.2e-3), e2 = rel_err(rx, 2.0e-4);
  return {e1 <= 1e-15 && e2 <= 1e-15,
          "tx=" + fmt(tx, 17) + " rx=" + fmt(rx, 17) + " rel errors " + fmt(e1) + ", " + fmt(e2)};
}

Verdict fitness_oracle() {
  std::mt19937 gen(2024);
  std::uniform_int_distribution<int> node_count(1, 30), head_count(1, 5);
  std::uniform_real_distribution<double> coord(0, 100);
  double worst = 0;
  for (int i = 0; i < 200; ++i) {
    auto nodes = oracle::random_nodes(gen, node_count(gen));
    std::vector<double> heads(static_cast<std::size_t>(2 * head_count(gen)));
    for (auto& h : heads) h = coord(gen);
    double got = fitness(heads, nodes);
    double want = oracle::fitness(heads, nodes);
    double err = want == 0 ? std::fabs(got) : rel_err(got, want);
    worst = std::max(worst, err);
  }
  return {worst <= 1e-9, "200 instances, worst relative error " + fmt(worst)};
}

Verdict conservation() {
  bool ok = true;
  double worst = 0;
  std::string runs;
  for (double energy : {0.5, NetworkConfig{}.initial_energy}) {
    NetworkConfig cfg;
    cfg.initial_energy = energy;
    for (auto algo : {Algorithm::kModifiedAfsa, Algorithm::kLeach}) {
      auto run = run_simulation(cfg, algo, AlgorithmParams{}, RunSeeds::from(17));
      double spent = 0;
      for (const auto& m : run.rounds) spent += m.energy_spent;
      double drop = run.initial_energy - run.rounds.back().total_energy;
      double err = rel_err(spent, drop);
      worst = std::max(worst, err);
      ok = ok && err <= 1e-12;
      runs += std::string(runs.empty() ? "" : ", ") + std::string(algorithm_name(algo)) + "@" +
              fmt(energy) + "J " + std::to_string(run.rounds.size()) + " rounds";
    }
  }
  return {ok, runs + "; worst relative error " + fmt(worst)};
}

Verdict bulletin_monotone() {
  NetworkConfig cfg;
  int violations = 0;
  std::size_t iterations = 0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto nodes = make_nodes(cfg, 500 + seed);
    auto run = run_clusterer(nodes, cfg, ModAfsaParams{}, seed);
    for (std::size_t i = 1; i < run.history.size(); ++i)
      if (run.history[i] > run.history[i - 1]) ++violations;
    iterations += run.history.size();
  }
  return {violations == 0,
          "20 runs, " + std::to_string(iterations) + " bulletin records, " + std::to_string(violations) +
              " increases"};
}

struct Corpus {
  ExperimentSummary summary;
  std::vector<Algorithm> algorithms;
  const AlgorithmSummary& of(Algorithm a) const {
    for (const auto& s : summary.algorithms)
      if (s.algorithm == a) return s;
    throw std::logic_error("algorithm missing from corpus");
  }
};

Corpus& corpus() {
  static Corpus c = [] {
    Corpus out;
    out.algorithms = {Algorithm::kModifiedAfsa, Algorithm::kPso, Algorithm::kLeach};
    out.summary = run_experiment(NetworkConfig{}, out.algorithms, AlgorithmParams{}, 30, 1, 1);
    return out;
  }();
  return c;
}

Verdict ordinal_lifetimes() {
  const auto& c = corpus();
  const auto& mod = c.of(Algorithm::kModifiedAfsa);
  const auto& pso = c.of(Algorithm::kPso);
  const auto& leach = c.of(Algorithm::kLeach);
  // unfinished runs leave FND/LND unset and drop out of the mean; require none
  bool complete = mod.fnd.samples == 30 && pso.fnd.samples == 30 && leach.fnd.samples == 30 &&
                  mod.lnd.samples == 30 && leach.lnd.samples == 30;
  bool fnd_mod_pso = mod.fnd.mean > pso.fnd.mean;
  bool fnd_pso_leach = pso.fnd.mean >= leach.fnd.mean;
  bool lnd_mod_leach = mod.lnd.mean > leach.lnd.mean;
  double ratio = leach.fnd.mean / mod.fnd.mean;
  bool half = ratio <= 0.5;
  std::string d = "30 reps; FND mod " + fmt(mod.fnd.mean) + "(" + fmt(mod.fnd.stddev, 3) + ") pso " +
                  fmt(pso.fnd.mean) + "(" + fmt(pso.fnd.stddev, 3) + ") leach " + fmt(leach.fnd.mean) +
                  "(" + fmt(leach.fnd.stddev, 3) + "); LND mod " + fmt(mod.lnd.mean) + " pso " +
                  fmt(pso.lnd.mean) + " leach " + fmt(leach.lnd.mean) + "; checks mod>pso " +
                  (fnd_mod_pso ? "ok" : "NO") + ", pso>=leach " + (fnd_pso_leach ? "ok" : "NO") +
                  ", lnd mod>leach " + (lnd_mod_leach ? "ok" : "NO") + ", leach/mod FND " + fmt(ratio, 3) +
                  (half ? " ok" : " NO (needs <= 0.5)") + (complete ? "" : ", incomplete runs");
  return {complete && fnd_mod_pso && fnd_pso_leach && lnd_mod_leach && half, d};
}

Verdict head_count_rule() {
  const auto& c = corpus();
  NetworkConfig cfg;
  int violations = 0;
  std::size_t rounds = 0;
  for (std::size_t a = 0; a < c.algorithms.size(); ++a) {
    if (!uses_cluster_count(c.algorithms[a])) continue;
    for (const auto& run : c.summary.runs[a])
      for (const auto& m : run.rounds) {
        ++rounds;
        if (static_cast<int>(m.head_ids.size()) != cluster_count(m.alive_before, cfg.cluster_fraction))
          ++violations;
      }
  }
  return {violations == 0 && rounds > 0,
          std::to_string(rounds) + " optimizer rounds, " + std::to_string(violations) + " violations"};
}

Verdict energy_guard() {
  const auto& c = corpus();
  int violations = 0;
  std::size_t guarded = 0;
  for (std::size_t a = 0; a < c.algorithms.size(); ++a) {
    if (c.algorithms[a] != Algorithm::kModifiedAfsa) continue;
    for (const auto& run : c.summary.runs[a])
      for (const auto& m : run.rounds)
        for (const auto& h : m.heads) {
          if (!h.guarded) continue;
          ++guarded;
          if (!(h.energy_before > m.mean_energy_before)) ++violations;
        }
  }
  return {violations == 0 && guarded > 0,
          std::to_string(guarded) + " guarded heads, " + std::to_string(violations) + " violations"};
}

Verdict determinism() {
  NetworkConfig small;
  small.nodes_count = 50;
  struct Triple {
    NetworkConfig cfg;
    Algorithm algo;
    std::uint64_t seed;
  };
  std::vector<Triple> triples{{NetworkConfig{}, Algorithm::kModifiedAfsa, 42},
                              {NetworkConfig{}, Algorithm::kPso, 7},
                              {NetworkConfig{}, Algorithm::kLeach, 3},
                              {small, Algorithm::kStandardAfsa, 11},
                              {small, Algorithm::kModifiedAfsa, 99}};
  int same = 0;
  for (const auto& t : triples) {
    auto a = rounds_csv(run_simulation(t.cfg, t.algo, AlgorithmParams{}, RunSeeds::from(t.seed)));
    auto b = rounds_csv(run_simulation(t.cfg, t.algo, AlgorithmParams{}, RunSeeds::from(t.seed)));
    if (a == b) ++same;
  }
  return {same == 5, std::to_string(same) + "/5 triples byte-identical"};
}

Verdict sphere_smoke() {
  // Pilot over these 20 seeds gave a median near 2e-6.
  auto sphere = [](std::span<const double> x) { return x[0] * x[0] + x[1] * x[1]; };
  auto bounds = Bounds::cube(2, -10, 10);
  AfsaParams p;
  p.population_size = 30;
  p.max_iterations = 200;
  std::vector<double> finals;
  for (std::uint64_t seed = 0; seed < 20; ++seed)
    finals.push_back(run_standard(sphere, bounds, p, seed).bulletin.best_fitness);
  std::sort(finals.begin(), finals.end());
  double median = 0.5 * (finals[9] + finals[10]);
  return {median < 0.1, "median bulletin fitness " + fmt(median) + " over 20 seeds"};
}

Verdict energy_curve_shape() {
  const auto& c = corpus();
  bool monotone = true;
  for (const auto& s : c.summary.algorithms)
    for (std::size_t r = 1; r < s.energy_curve.size(); ++r)
      if (s.energy_curve[r] > s.energy_curve[r - 1]) monotone = false;
  const auto& mod = c.of(Algorithm::kModifiedAfsa).energy_curve;
  const auto& leach = c.of(Algorithm::kLeach).energy_curve;
  int below = 0;
  for (std::size_t r = 10; r < mod.size(); ++r)
    if (mod[r] < leach[r]) ++below;
  return {monotone && below == 0,
          std::string("curves ") + (monotone ? "non-increasing" : "NOT monotone") + ", mod below leach in " +
              std::to_string(below) + " of " + std::to_string(mod.size() - 10) + " rounds from 10; round 50: mod " +
              fmt(mod[50]) + " J, leach " + fmt(leach[50]) + " J"};
}

}  // namespace

int main() {
  report(1, "energy formula exactness", energy_exactness);
  report(2, "fitness oracle equivalence", fitness_oracle);
  report(3, "energy conservation", conservation);
  report(4, "bulletin monotonicity", bulletin_monotone);
  report(5, "ordinal lifetime reproduction", ordinal_lifetimes);
  report(6, "head-count rule", head_count_rule);
  report(7, "energy guard", energy_guard);
  report(8, "determinism", determinism);
  report(9, "standard AFSA sphere benchmark", sphere_smoke);
  report(10, "energy curve shape", energy_curve_shape);
  std::printf("%d of 10 criteria passed\n", 10 - failures);
  return failures == 0 ? 0 : 1;
}
