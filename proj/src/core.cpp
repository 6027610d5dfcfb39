#include "catswarm/core.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace catswarm {

Bounds::Bounds(std::vector<double> lower, std::vector<double> upper)
    : lower_(std::move(lower)), upper_(std::move(upper)) {
  if (lower_.empty()) throw std::invalid_argument("bounds: dimension must be at least 1");
  if (lower_.size() != upper_.size())
    throw std::invalid_argument("bounds: lower and upper have different lengths");
  for (std::size_t d = 0; d < lower_.size(); ++d) {
    if (!(lower_[d] < upper_[d]))
      throw std::invalid_argument("bounds: lower must be strictly below upper in dimension " +
                                  std::to_string(d));
  }
}

Bounds Bounds::uniform(std::size_t dimension, double lo, double hi) {
  return Bounds(std::vector<double>(dimension, lo), std::vector<double>(dimension, hi));
}

bool Bounds::contains(std::span<const double> x) const noexcept {
  if (x.size() != dimension()) return false;
  for (std::size_t d = 0; d < x.size(); ++d) {
    if (!(x[d] >= lower_[d] && x[d] <= upper_[d])) return false;
  }
  return true;
}

std::vector<double> velocity_limits(const Bounds& bounds, double fraction) {
  std::vector<double> vmax(bounds.dimension());
  for (std::size_t d = 0; d < vmax.size(); ++d) vmax[d] = fraction * bounds.width(d);
  return vmax;
}

std::vector<Cat> init_population(const ObjectiveSpec& objective, std::size_t n, RngStream& rng,
                                 double velocity_fraction) {
  const Bounds& bounds = objective.bounds;
  const std::size_t dim = bounds.dimension();
  const std::vector<double> vmax = velocity_limits(bounds, velocity_fraction);

  std::vector<Cat> cats(n);
  for (Cat& cat : cats) {
    cat.position.resize(dim);
    cat.velocity.resize(dim);
    for (std::size_t d = 0; d < dim; ++d)
      cat.position[d] = rng.next_uniform(bounds.lower(d), bounds.upper(d));
    for (std::size_t d = 0; d < dim; ++d) cat.velocity[d] = rng.next_uniform(-vmax[d], vmax[d]);
    cat.cost = objective(cat.position, rng);
  }
  return cats;
}

void clamp_position_inplace(std::span<double> x, const Bounds& bounds) noexcept {
  for (std::size_t d = 0; d < x.size(); ++d) {
    if (x[d] < bounds.lower(d)) {
      x[d] = bounds.lower(d);
    } else if (x[d] > bounds.upper(d)) {
      x[d] = bounds.upper(d);
    }
  }
}

std::vector<double> clamp_position(std::span<const double> x, const Bounds& bounds) {
  if (x.size() != bounds.dimension())
    throw std::invalid_argument("clamp_position: vector length does not match bounds");
  std::vector<double> out(x.begin(), x.end());
  clamp_position_inplace(out, bounds);
  return out;
}

void clamp_velocity_inplace(std::span<double> v, std::span<const double> vmax) noexcept {
  for (std::size_t d = 0; d < v.size(); ++d) v[d] = std::clamp(v[d], -vmax[d], vmax[d]);
}

BestSoFar update_global_best(std::span<const Cat> population, const BestSoFar& incumbent) {
  const Cat* best = nullptr;
  double best_cost = incumbent.cost;
  for (const Cat& cat : population) {
    if (cat.cost < best_cost) {
      best_cost = cat.cost;
      best = &cat;
    }
  }
  if (best == nullptr) return incumbent;
  return BestSoFar{best->position, best->cost};
}

std::vector<std::vector<double>> positions_of(std::span<const Cat> population) {
  std::vector<std::vector<double>> out;
  out.reserve(population.size());
  for (const Cat& cat : population) out.push_back(cat.position);
  return out;
}

}  // namespace catswarm
