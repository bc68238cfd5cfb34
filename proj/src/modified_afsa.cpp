#include "afsa_wsn/modified_afsa.hpp"

#include <cmath>
#include <stdexcept>

namespace afsa_wsn {

std::vector<std::string> ModAfsaParams::violations() const {
  std::vector<std::string> out;
  if (population_multiplier < 1) out.emplace_back("population_multiplier must be >= 1");
  if (try_number < 1) out.emplace_back("try_number must be >= 1");
  if (!(v_fraction > 0 && v_fraction <= 1)) out.emplace_back("v_fraction must be in (0, 1]");
  if (!(s_fraction > 0 && s_fraction <= 1)) out.emplace_back("s_fraction must be in (0, 1]");
  if (!(p1 >= 0 && p1 <= 1)) out.emplace_back("p1 must be in [0, 1]");
  if (!(p2 >= 0 && p2 <= 1)) out.emplace_back("p2 must be in [0, 1]");
  if (convergence_window < 1) out.emplace_back("convergence_window must be >= 1");
  if (max_iterations < 0) out.emplace_back("max_iterations must be >= 0");
  return out;
}

VisualStep adaptive_visual_step(std::span<const double> position,
                                const Bulletin& bulletin,
                                const ModAfsaParams& params) {
  double sq = 0.0;
  for (std::size_t d = 0; d < position.size(); ++d) {
    double diff = bulletin.best_position[d] - position[d];
    sq += diff * diff;
  }
  double visual = params.v_fraction * std::sqrt(sq);
  return {visual, params.s_fraction * visual};
}

MoveSettings modified_move_settings(VisualStep vs, const ModAfsaParams& params) {
  return {vs.visual, vs.step, params.try_number, std::nullopt};
}

std::vector<double> jump_relative(std::span<const double> position,
                                  std::span<const double> bulletin_position,
                                  double u) {
  std::vector<double> next(position.begin(), position.end());
  for (std::size_t d = 0; d < next.size(); ++d)
    next[d] += (bulletin_position[d] - position[d]) * u;
  return next;
}

std::vector<double> bulletin_jump(std::span<const double> position,
                                  const Bulletin& bulletin, double p1,
                                  const Bounds& bounds, Rng& rng) {
  if (!rng.chance(p1)) return {position.begin(), position.end()};
  auto next = jump_relative(position, bulletin.best_position, rng.symmetric());
  bounds.clamp(next);
  return next;
}

std::vector<double> recenter_head(std::span<const double> position,
                                  std::span<const NodeState> alive_nodes,
                                  std::size_t head) {
  std::vector<double> next(position.begin(), position.end());
  double sx = 0.0, sy = 0.0;
  std::size_t owned = 0;
  for (const auto& n : alive_nodes) {
    if (!n.alive || nearest_head(position, n.pos) != head) continue;
    sx += n.pos.x;
    sy += n.pos.y;
    ++owned;
  }
  if (owned > 0) {
    next[2 * head] = sx / static_cast<double>(owned);
    next[2 * head + 1] = sy / static_cast<double>(owned);
  }
  return next;
}

std::vector<double> head_recenter(std::span<const double> position,
                                  std::span<const NodeState> alive_nodes,
                                  double p2, Rng& rng) {
  if (!rng.chance(p2)) return {position.begin(), position.end()};
  return recenter_head(position, alive_nodes, rng.index(position.size() / 2));
}

ClusteringRun run_clusterer(std::span<const NodeState> alive_nodes,
                            const NetworkConfig& cfg,
                            const ModAfsaParams& params, std::uint64_t seed) {
  if (auto errs = params.violations(); !errs.empty())
    throw std::invalid_argument("modified-afsa: " + errs.front());
  auto alive = alive_subset(alive_nodes);
  if (alive.empty()) throw std::invalid_argument("run_clusterer: no alive nodes");
  if (alive.size() == 1) return sole_survivor_run(alive.front());

  const int heads = cluster_count(static_cast<int>(alive.size()), cfg.cluster_fraction);
  const auto bounds = field_bounds(cfg, heads);
  const double mean = mean_energy(alive);
  Rng rng(seed);
  Evaluator eval([&alive](std::span<const double> x) { return fitness(x, alive); });

  std::vector<Fish> population;
  const auto size = static_cast<std::size_t>(params.population_multiplier * heads);
  population.reserve(size);
  for (std::size_t i = 0; i < size; ++i) population.push_back(eval.evaluate(bounds.sample(rng)));

  std::vector<double> history{eval.bulletin().best_fitness};
  ConvergenceTracker tracker(params.convergence_window);
  bool converged = false;
  int iterations = 0;
  std::vector<Fish> next(size);

  while (iterations < params.max_iterations && !converged) {
    auto view = make_view(population, eval);
    for (std::size_t i = 0; i < size; ++i) {
      Fish current = population[i];
      auto vs = adaptive_visual_step(current.position, eval.bulletin(), params);
      if (vs.visual > kMinMoveDistance) {
        auto settings = modified_move_settings(vs, params);
        auto swarm = swarm_behavior(current, view, settings, eval, bounds, rng);
        auto follow = follow_behavior(i, view, settings, eval, bounds, rng);
        current = select_next(follow, swarm);
      }
      if (rng.chance(params.p1)) {
        auto jumped = jump_relative(current.position, eval.bulletin().best_position, rng.symmetric());
        bounds.clamp(jumped);
        current = eval.evaluate(std::move(jumped));
      }
      if (rng.chance(params.p2)) {
        auto head = rng.index(static_cast<std::size_t>(heads));
        current = eval.evaluate(recenter_head(current.position, alive, head));
      }
      next[i] = std::move(current);
    }
    population.swap(next);
    ++iterations;
    history.push_back(eval.bulletin().best_fitness);
    converged = tracker.update(
        snapped_ids(snap_heads(eval.bulletin().best_position, alive, mean)));
  }

  auto run = finish_run(eval.bulletin().best_position, alive);
  run.history = std::move(history);
  run.iterations = iterations;
  run.evaluations = eval.calls();
  run.converged = converged;
  return run;
}

}  // namespace afsa_wsn
