#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "catswarm/rng.hpp"

namespace catswarm {

/// Box constraints. lower[d] < upper[d] for every dimension, D >= 1.
class Bounds {
 public:
  Bounds(std::vector<double> lower, std::vector<double> upper);

  /// The same [lo, hi] interval on every one of `dimension` axes.
  static Bounds uniform(std::size_t dimension, double lo, double hi);

  std::size_t dimension() const noexcept { return lower_.size(); }
  const std::vector<double>& lower() const noexcept { return lower_; }
  const std::vector<double>& upper() const noexcept { return upper_; }
  double lower(std::size_t d) const { return lower_[d]; }
  double upper(std::size_t d) const { return upper_[d]; }
  double width(std::size_t d) const { return upper_[d] - lower_[d]; }

  bool contains(std::span<const double> x) const noexcept;

 private:
  std::vector<double> lower_;
  std::vector<double> upper_;
};

enum class Mode { Unassigned, Seeking, Tracing };

struct Cat {
  std::vector<double> position;
  std::vector<double> velocity;
  double cost = std::numeric_limits<double>::infinity();
  Mode flag = Mode::Unassigned;
};

/// Objective function signature. The stream is only consumed by functions
/// with built-in noise; deterministic objectives ignore it.
using ObjectiveFn = std::function<double(std::span<const double>, RngStream&)>;

/// A box-bounded minimization problem.
struct ObjectiveSpec {
  std::string name;
  Bounds bounds;
  ObjectiveFn evaluate;

  std::size_t dimension() const noexcept { return bounds.dimension(); }
  double operator()(std::span<const double> x, RngStream& rng) const { return evaluate(x, rng); }
};

struct BestSoFar {
  std::vector<double> position;
  double cost = std::numeric_limits<double>::infinity();
};

struct RunResult {
  std::vector<double> best_position;
  double best_cost = std::numeric_limits<double>::infinity();
  std::vector<double> convergence;      // best-so-far after each iteration
  std::vector<double> diversity_trace;  // Div after each iteration; empty when not recorded
  double elapsed_seconds = 0.0;
  std::uint64_t seed = 0;
};

/// Per-dimension velocity limit: fraction * (upper - lower).
std::vector<double> velocity_limits(const Bounds& bounds, double fraction = 1.0);

/// N cats with positions uniform in the box, velocities uniform in
/// [-vmax, vmax] and evaluated costs. Flags are left Unassigned.
std::vector<Cat> init_population(const ObjectiveSpec& objective, std::size_t n, RngStream& rng,
                                 double velocity_fraction = 1.0);

std::vector<double> clamp_position(std::span<const double> x, const Bounds& bounds);
void clamp_position_inplace(std::span<double> x, const Bounds& bounds) noexcept;
void clamp_velocity_inplace(std::span<double> v, std::span<const double> vmax) noexcept;

/// Minimum-cost pair among the incumbent and the population. Ties keep the
/// incumbent, then the earliest cat.
BestSoFar update_global_best(std::span<const Cat> population, const BestSoFar& incumbent);

std::vector<std::vector<double>> positions_of(std::span<const Cat> population);

}  // namespace catswarm
