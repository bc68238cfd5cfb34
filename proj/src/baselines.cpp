#include "afsa_wsn/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace afsa_wsn {

// ---------------------------------------------------------------- LEACH

int LeachParams::epoch() const {
  if (epoch_length > 0) return epoch_length;
  return std::max(1, static_cast<int>(std::lround(1.0 / head_probability)));
}

std::vector<std::string> LeachParams::violations() const {
  std::vector<std::string> out;
  if (!(head_probability > 0 && head_probability < 1))
    out.emplace_back("head_probability must be in (0, 1)");
  if (epoch_length < 0) out.emplace_back("epoch_length must be >= 0");
  return out;
}

double leach_threshold(double p, int round_index, int epoch) {
  return p / (1.0 - p * static_cast<double>(round_index % epoch));
}

ClusterPlan leach_select(std::span<const NodeState> nodes, int round_index,
                         const LeachParams& params, Rng& rng,
                         LeachRotation& rotation) {
  std::vector<const NodeState*> alive;
  int max_id = -1;
  for (const auto& n : nodes) {
    max_id = std::max(max_id, n.id);
    if (n.alive) alive.push_back(&n);
  }
  if (alive.empty()) throw std::invalid_argument("leach_select: no alive nodes");
  std::sort(alive.begin(), alive.end(),
            [](const NodeState* a, const NodeState* b) { return a->id < b->id; });

  const int epoch = params.epoch();
  const int epoch_index = round_index / epoch;
  if (epoch_index != rotation.epoch_index ||
      rotation.served.size() < static_cast<std::size_t>(max_id + 1)) {
    if (epoch_index != rotation.epoch_index) rotation.served.assign(rotation.served.size(), false);
    rotation.served.resize(static_cast<std::size_t>(max_id + 1), false);
    rotation.epoch_index = epoch_index;
  }

  const double threshold = leach_threshold(params.head_probability, round_index, epoch);
  std::vector<const NodeState*> eligible;
  std::vector<int> heads;
  for (const auto* n : alive) {
    if (rotation.served[static_cast<std::size_t>(n->id)]) continue;
    eligible.push_back(n);
    if (rng.unit() < threshold) heads.push_back(n->id);
  }
  if (heads.empty()) {
    const auto& pool = eligible.empty() ? alive : eligible;
    heads.push_back(pool[rng.index(pool.size())]->id);
  }
  for (int h : heads) rotation.served[static_cast<std::size_t>(h)] = true;

  std::vector<NodeState> live;
  live.reserve(alive.size());
  for (const auto* n : alive) live.push_back(*n);
  return assign_members(live, heads);
}

// ---------------------------------------------------------------- PSO

std::vector<std::string> PsoParams::violations() const {
  std::vector<std::string> out;
  if (population_multiplier < 1) out.emplace_back("population_multiplier must be >= 1");
  if (!(c1 > 0)) out.emplace_back("c1 must be > 0");
  if (!(c2 > 0)) out.emplace_back("c2 must be > 0");
  if (max_iterations < 0) out.emplace_back("max_iterations must be >= 0");
  if (convergence_window < 1) out.emplace_back("convergence_window must be >= 1");
  return out;
}

double draw_inertia(InertiaRule rule, Rng& rng) {
  double r = rng.unit();
  switch (rule) {
    case InertiaRule::kProduct:
      return 0.5 * (r * 0.5);
    case InertiaRule::kOffset:
      return 0.5 + r * 0.5;
  }
  return 0.0;
}

PsoRun run_pso(const Objective& objective, const Bounds& bounds,
               int population_size, const PsoParams& params,
               std::uint64_t seed, const StopPredicate& stop) {
  if (population_size < 1) throw std::invalid_argument("run_pso: empty swarm");
  if (auto errs = params.violations(); !errs.empty())
    throw std::invalid_argument("pso: " + errs.front());

  const std::size_t dims = bounds.dims();
  std::vector<double> vmax(dims);
  for (std::size_t d = 0; d < dims; ++d) vmax[d] = bounds.upper[d] - bounds.lower[d];

  Rng rng(seed);
  Evaluator eval(objective);
  std::vector<Fish> particles;
  particles.reserve(static_cast<std::size_t>(population_size));
  for (int i = 0; i < population_size; ++i) particles.push_back(eval.evaluate(bounds.sample(rng)));
  std::vector<Fish> personal = particles;
  std::vector<std::vector<double>> velocity(particles.size(), std::vector<double>(dims, 0.0));

  PsoRun run;
  run.history.push_back(eval.bulletin().best_fitness);
  while (run.iterations < params.max_iterations) {
    const double w = draw_inertia(params.inertia, rng);
    for (std::size_t i = 0; i < particles.size(); ++i) {
      auto& x = particles[i].position;
      auto& v = velocity[i];
      const auto& pbest = personal[i].position;
      const auto& gbest = eval.bulletin().best_position;
      for (std::size_t d = 0; d < dims; ++d) {
        double r1 = rng.unit();
        double r2 = rng.unit();
        v[d] = w * v[d] + params.c1 * r1 * (pbest[d] - x[d]) + params.c2 * r2 * (gbest[d] - x[d]);
        v[d] = std::clamp(v[d], -vmax[d], vmax[d]);
        x[d] += v[d];
      }
      bounds.clamp(x);
      particles[i].fitness = eval(x);
      if (particles[i].fitness < personal[i].fitness) personal[i] = particles[i];
    }
    ++run.iterations;
    run.history.push_back(eval.bulletin().best_fitness);
    if (stop && stop(run.iterations, eval.bulletin())) break;
  }
  run.gbest = eval.bulletin();
  run.evaluations = eval.calls();
  return run;
}

namespace {

/// Stop predicate feeding the snapped bulletin heads to a convergence tracker.
StopPredicate snap_convergence(std::span<const NodeState> alive, double mean,
                               ConvergenceTracker& tracker, bool& converged) {
  return [alive, mean, &tracker, &converged](int, const Bulletin& b) {
    converged = tracker.update(snapped_ids(snap_heads(b.best_position, alive, mean)));
    return converged;
  };
}

}  // namespace

ClusteringRun pso_clusterer(std::span<const NodeState> alive_nodes,
                            const NetworkConfig& cfg, const PsoParams& params,
                            std::uint64_t seed) {
  auto alive = alive_subset(alive_nodes);
  if (alive.empty()) throw std::invalid_argument("pso_clusterer: no alive nodes");
  if (alive.size() == 1) return sole_survivor_run(alive.front());

  const int heads = cluster_count(static_cast<int>(alive.size()), cfg.cluster_fraction);
  ConvergenceTracker tracker(params.convergence_window);
  bool converged = false;
  auto pso = run_pso([&alive](std::span<const double> x) { return fitness(x, alive); },
                     field_bounds(cfg, heads), params.population_multiplier * heads,
                     params, seed, snap_convergence(alive, mean_energy(alive), tracker, converged));

  auto run = finish_run(pso.gbest.best_position, alive);
  run.history = std::move(pso.history);
  run.iterations = pso.iterations;
  run.evaluations = pso.evaluations;
  run.converged = converged;
  return run;
}

// ---------------------------------------------------------------- standard AFSA

std::vector<std::string> AfsaClusterParams::violations() const {
  AfsaParams core{population_multiplier, visual, step, try_number, crowd_factor, max_iterations};
  auto out = core.violations();
  if (convergence_window < 1) out.emplace_back("convergence_window must be >= 1");
  return out;
}

ClusteringRun standard_afsa_clusterer(std::span<const NodeState> alive_nodes,
                                      const NetworkConfig& cfg,
                                      const AfsaClusterParams& params,
                                      std::uint64_t seed) {
  if (auto errs = params.violations(); !errs.empty())
    throw std::invalid_argument("standard-afsa: " + errs.front());
  auto alive = alive_subset(alive_nodes);
  if (alive.empty()) throw std::invalid_argument("standard_afsa_clusterer: no alive nodes");
  if (alive.size() == 1) return sole_survivor_run(alive.front());

  const int heads = cluster_count(static_cast<int>(alive.size()), cfg.cluster_fraction);
  AfsaParams core{params.population_multiplier * heads, params.visual, params.step,
                  params.try_number, params.crowd_factor, params.max_iterations};
  ConvergenceTracker tracker(params.convergence_window);
  bool converged = false;
  auto afsa = run_standard([&alive](std::span<const double> x) { return fitness(x, alive); },
                           field_bounds(cfg, heads), core, seed,
                           snap_convergence(alive, mean_energy(alive), tracker, converged));

  auto run = finish_run(afsa.bulletin.best_position, alive);
  run.history = std::move(afsa.history);
  run.iterations = afsa.iterations;
  run.evaluations = afsa.evaluations;
  run.converged = converged;
  return run;
}

}  // namespace afsa_wsn
