#include "afsa_wsn/afsa.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace afsa_wsn {

namespace {

double distance(std::span<const double> a, std::span<const double> b) {
  double sq = 0.0;
  for (std::size_t d = 0; d < a.size(); ++d) {
    double diff = b[d] - a[d];
    sq += diff * diff;
  }
  return std::sqrt(sq);
}

}  // namespace

Bounds Bounds::cube(std::size_t dims, double lo, double hi) {
  return {std::vector<double>(dims, lo), std::vector<double>(dims, hi)};
}

void Bounds::clamp(std::span<double> x) const {
  for (std::size_t d = 0; d < x.size(); ++d) x[d] = std::clamp(x[d], lower[d], upper[d]);
}

bool Bounds::contains(std::span<const double> x) const {
  for (std::size_t d = 0; d < x.size(); ++d)
    if (!(x[d] >= lower[d] && x[d] <= upper[d])) return false;
  return true;
}

std::vector<double> Bounds::sample(Rng& rng) const {
  std::vector<double> x(dims());
  for (std::size_t d = 0; d < x.size(); ++d) x[d] = rng.uniform(lower[d], upper[d]);
  return x;
}

double Evaluator::operator()(std::span<const double> x) {
  double f = objective_(x);
  ++calls_;
  if (f < bulletin_.best_fitness) {
    bulletin_.best_fitness = f;
    bulletin_.best_position.assign(x.begin(), x.end());
  }
  return f;
}

Fish Evaluator::evaluate(std::vector<double> x) {
  double f = (*this)(x);
  return {std::move(x), f};
}

std::vector<std::string> AfsaParams::violations() const {
  std::vector<std::string> out;
  if (population_size < 1) out.emplace_back("population_size must be >= 1");
  if (!(visual > 0)) out.emplace_back("visual must be > 0");
  if (!(step > 0)) out.emplace_back("step must be > 0");
  if (step > visual) out.emplace_back("step must not exceed visual");
  if (try_number < 1) out.emplace_back("try_number must be >= 1");
  if (!(crowd_factor > 0 && crowd_factor < 1)) out.emplace_back("crowd_factor must be in (0, 1)");
  if (max_iterations < 0) out.emplace_back("max_iterations must be >= 0");
  return out;
}

std::vector<double> free_move(std::span<const double> x, double step,
                              const Bounds& bounds, Rng& rng) {
  std::vector<double> next(x.begin(), x.end());
  for (auto& v : next) v += step * rng.symmetric();
  bounds.clamp(next);
  return next;
}

std::optional<std::vector<double>> move_toward(std::span<const double> x,
                                               std::span<const double> target,
                                               double step, const Bounds& bounds,
                                               Rng& rng) {
  double dis = distance(x, target);
  if (dis < kMinMoveDistance) return std::nullopt;
  double scale = step * rng.unit() / dis;
  std::vector<double> next(x.begin(), x.end());
  for (std::size_t d = 0; d < next.size(); ++d) next[d] += (target[d] - x[d]) * scale;
  bounds.clamp(next);
  return next;
}

Fish prey(const Fish& fish, const MoveSettings& settings, Evaluator& eval,
          const Bounds& bounds, Rng& rng) {
  for (int attempt = 0; attempt < settings.try_number; ++attempt) {
    auto probe = free_move(fish.position, settings.visual, bounds, rng);
    if (eval(probe) >= fish.fitness) continue;
    if (auto next = move_toward(fish.position, probe, settings.step, bounds, rng))
      return eval.evaluate(std::move(*next));
  }
  return eval.evaluate(free_move(fish.position, settings.step, bounds, rng));
}

std::vector<double> swarm_center(std::span<const Fish> population) {
  if (population.empty()) throw std::invalid_argument("swarm_center: empty population");
  std::vector<double> center(population.front().position.size(), 0.0);
  for (const auto& f : population)
    for (std::size_t d = 0; d < center.size(); ++d) center[d] += f.position[d];
  for (auto& c : center) c /= static_cast<double>(population.size());
  return center;
}

SwarmView make_view(std::span<const Fish> population, Evaluator& eval) {
  return {population, eval.evaluate(swarm_center(population))};
}

std::size_t count_within(std::span<const Fish> population,
                         std::span<const double> point, double radius,
                         std::optional<std::size_t> skip) {
  std::size_t n = 0;
  for (std::size_t j = 0; j < population.size(); ++j) {
    if (skip && *skip == j) continue;
    if (distance(population[j].position, point) <= radius) ++n;
  }
  return n;
}

Fish swarm_behavior(const Fish& fish, const SwarmView& view,
                    const MoveSettings& settings, Evaluator& eval,
                    const Bounds& bounds, Rng& rng) {
  bool accept = view.center.fitness <= fish.fitness;
  if (accept && settings.crowd_factor) {
    auto nc = count_within(view.population, view.center.position, settings.visual);
    auto density = static_cast<double>(nc) / static_cast<double>(view.population.size());
    accept = nc > 0 && *settings.crowd_factor > density;
  }
  if (accept) {
    if (auto next = move_toward(fish.position, view.center.position, settings.step, bounds, rng))
      return eval.evaluate(std::move(*next));
  }
  return prey(fish, settings, eval, bounds, rng);
}

Fish follow_behavior(std::size_t self, const SwarmView& view,
                     const MoveSettings& settings, Evaluator& eval,
                     const Bounds& bounds, Rng& rng) {
  const auto& pop = view.population;
  const Fish& fish = pop[self];
  std::optional<std::size_t> best;
  for (std::size_t j = 0; j < pop.size(); ++j) {
    if (j == self || distance(fish.position, pop[j].position) > settings.visual) continue;
    if (!best || pop[j].fitness < pop[*best].fitness) best = j;
  }
  if (best && pop[*best].fitness <= fish.fitness) {
    bool accept = true;
    if (settings.crowd_factor) {
      auto nn = count_within(pop, pop[*best].position, settings.visual, *best);
      accept = *settings.crowd_factor >
               static_cast<double>(nn) / static_cast<double>(pop.size());
    }
    if (accept) {
      if (auto next = move_toward(fish.position, pop[*best].position, settings.step, bounds, rng))
        return eval.evaluate(std::move(*next));
    }
  }
  return prey(fish, settings, eval, bounds, rng);
}

const Fish& select_next(const Fish& follow, const Fish& swarm) {
  return follow.fitness <= swarm.fitness ? follow : swarm;
}

AfsaRun run_standard(const Objective& objective, const Bounds& bounds,
                     const AfsaParams& params, std::uint64_t seed,
                     const StopPredicate& stop) {
  if (auto errs = params.violations(); !errs.empty())
    throw std::invalid_argument("run_standard: " + errs.front());

  Rng rng(seed);
  Evaluator eval(objective);
  const auto settings = params.move_settings();

  std::vector<Fish> population;
  population.reserve(static_cast<std::size_t>(params.population_size));
  for (int i = 0; i < params.population_size; ++i)
    population.push_back(eval.evaluate(bounds.sample(rng)));

  AfsaRun run;
  run.history.push_back(eval.bulletin().best_fitness);

  std::vector<Fish> next(population.size());
  while (run.iterations < params.max_iterations) {
    auto view = make_view(population, eval);
    for (std::size_t i = 0; i < population.size(); ++i) {
      auto swarm = swarm_behavior(population[i], view, settings, eval, bounds, rng);
      auto follow = follow_behavior(i, view, settings, eval, bounds, rng);
      next[i] = select_next(follow, swarm);
    }
    population.swap(next);
    ++run.iterations;
    run.history.push_back(eval.bulletin().best_fitness);
    if (stop && stop(run.iterations, eval.bulletin())) break;
  }

  run.bulletin = eval.bulletin();
  run.evaluations = eval.calls();
  run.population = std::move(population);
  return run;
}

}  // namespace afsa_wsn
