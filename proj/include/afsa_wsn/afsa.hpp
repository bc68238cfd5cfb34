#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "afsa_wsn/random.hpp"

namespace afsa_wsn {

/// Minimization objective over a real vector.
using Objective = std::function<double(std::span<const double>)>;

/// Axis-aligned search box. Every position the optimizers produce is clamped
/// into it.
struct Bounds {
  std::vector<double> lower;
  std::vector<double> upper;

  static Bounds cube(std::size_t dims, double lo, double hi);

  std::size_t dims() const { return lower.size(); }
  void clamp(std::span<double> x) const;
  bool contains(std::span<const double> x) const;
  std::vector<double> sample(Rng& rng) const;
};

struct Fish {
  std::vector<double> position;
  double fitness = std::numeric_limits<double>::infinity();
};

struct Bulletin {
  std::vector<double> best_position;
  double best_fitness = std::numeric_limits<double>::infinity();
};

/// Wraps an objective so that every evaluation is offered to the bulletin.
/// The bulletin therefore always holds the best point evaluated so far.
class Evaluator {
 public:
  explicit Evaluator(Objective objective) : objective_(std::move(objective)) {}

  double operator()(std::span<const double> x);
  Fish evaluate(std::vector<double> x);

  const Bulletin& bulletin() const { return bulletin_; }
  std::size_t calls() const { return calls_; }

 private:
  Objective objective_;
  Bulletin bulletin_;
  std::size_t calls_ = 0;
};

/// Perception and movement limits for one fish's turn. Without a crowd
/// factor the swarm and follow moves are gated on fitness alone.
struct MoveSettings {
  double visual = 1.0;
  double step = 0.5;
  int try_number = 5;
  std::optional<double> crowd_factor;
};

struct AfsaParams {
  int population_size = 30;
  double visual = 1.0;
  double step = 0.5;
  int try_number = 5;
  double crowd_factor = 0.75;
  int max_iterations = 200;

  std::vector<std::string> violations() const;
  MoveSettings move_settings() const {
    return {visual, step, try_number, crowd_factor};
  }
};

/// Population at the start of an iteration plus its evaluated centroid.
struct SwarmView {
  std::span<const Fish> population;
  Fish center;
};

/// Moves shorter than this are skipped.
inline constexpr double kMinMoveDistance = 1e-12;

/// x + step * u_d per coordinate, u_d ~ U[-1, 1], clamped.
std::vector<double> free_move(std::span<const double> x, double step,
                              const Bounds& bounds, Rng& rng);

/// One step of random length in [0, step) along the unit vector from `x`
/// towards `target`, clamped. Empty when the two points coincide.
std::optional<std::vector<double>> move_toward(std::span<const double> x,
                                               std::span<const double> target,
                                               double step, const Bounds& bounds,
                                               Rng& rng);

/// Samples up to try_number points inside the visual range and steps towards
/// the first strict improvement; free move when none is found.
Fish prey(const Fish& fish, const MoveSettings& settings, Evaluator& eval,
          const Bounds& bounds, Rng& rng);

std::vector<double> swarm_center(std::span<const Fish> population);
SwarmView make_view(std::span<const Fish> population, Evaluator& eval);

/// Number of fish within `radius` of `point`, optionally skipping one index.
std::size_t count_within(std::span<const Fish> population,
                         std::span<const double> point, double radius,
                         std::optional<std::size_t> skip = std::nullopt);

/// Step towards the swarm centroid when it is at least as good and (with a
/// crowd factor) not overcrowded; prey otherwise.
Fish swarm_behavior(const Fish& fish, const SwarmView& view,
                    const MoveSettings& settings, Evaluator& eval,
                    const Bounds& bounds, Rng& rng);

/// Step towards the best neighbour within visual when it is at least as good
/// and (with a crowd factor) not overcrowded; prey otherwise. `self` indexes
/// the acting fish in `view.population`.
Fish follow_behavior(std::size_t self, const SwarmView& view,
                     const MoveSettings& settings, Evaluator& eval,
                     const Bounds& bounds, Rng& rng);

/// Follow result unless the swarm result is strictly better.
const Fish& select_next(const Fish& follow, const Fish& swarm);

/// Called after every iteration with the iteration count and the bulletin;
/// returning true ends the run.
using StopPredicate = std::function<bool(int, const Bulletin&)>;

struct AfsaRun {
  Bulletin bulletin;
  /// Bulletin fitness after initialization, then after each iteration.
  std::vector<double> history;
  int iterations = 0;
  std::size_t evaluations = 0;
  std::vector<Fish> population;
};

/// Standard fish swarm: every fish computes swarm and follow moves from the
/// same snapshot, keeps the better one, and the population is replaced
/// together at the end of the iteration.
AfsaRun run_standard(const Objective& objective, const Bounds& bounds,
                     const AfsaParams& params, std::uint64_t seed,
                     const StopPredicate& stop = {});

}  // namespace afsa_wsn
