#include "catswarm/cso.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>

#include "catswarm/dcso.hpp"
#include "catswarm/diversity.hpp"
#include "catswarm/parallel.hpp"

namespace catswarm {

std::size_t tracing_count(double mr, std::size_t population_size) noexcept {
  const double raw = std::floor(mr * static_cast<double>(population_size) + 0.5);
  return std::min(population_size, static_cast<std::size_t>(std::max(0.0, raw)));
}

void assign_modes_random(std::vector<Cat>& population, double mr, RngStream& rng) {
  if (population.empty()) throw std::invalid_argument("assign_modes_random: empty population");
  const std::size_t n = population.size();
  std::vector<std::size_t> picked(tracing_count(mr, n));
  std::vector<std::size_t> scratch(n);
  rng.sample_without_replacement(n, picked, scratch);
  for (Cat& cat : population) cat.flag = Mode::Seeking;
  for (std::size_t k : picked) population[k].flag = Mode::Tracing;
}

std::vector<double> roulette_probabilities(std::span<const double> costs) {
  if (costs.empty()) throw std::invalid_argument("roulette_probabilities: no costs");
  const auto [lo, hi] = std::minmax_element(costs.begin(), costs.end());
  const double fs_min = *lo;
  const double fs_max = *hi;
  std::vector<double> weights(costs.size(), 1.0);
  if (fs_max > fs_min) {
    for (std::size_t i = 0; i < costs.size(); ++i)
      weights[i] = std::abs(costs[i] - fs_max) / (fs_max - fs_min);
  }
  double total = 0.0;
  for (double w : weights) total += w;
  for (double& w : weights) w /= total;
  return weights;
}

std::size_t roulette_select(std::span<const double> weights, RngStream& rng) {
  const double u = rng.next_uniform();
  double cumulative = 0.0;
  std::size_t last_positive = 0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i] <= 0.0) continue;
    cumulative += weights[i];
    last_positive = i;
    if (u < cumulative) return i;
  }
  // Rounding can leave the cumulative sum a hair below 1.
  return last_positive;
}

void cso_seeking_step(Cat& cat, const CsoParams& params, RngStream& rng, const ObjectiveSpec& objective) {
  const std::size_t dim = cat.position.size();
  const std::size_t slots = static_cast<std::size_t>(params.smp);
  const std::size_t generated = params.spc ? slots - 1 : slots;
  const std::size_t changed = mutated_dimension_count(params.cdc, dim);

  std::vector<std::vector<double>> candidates;
  std::vector<double> costs;
  candidates.reserve(slots);
  costs.reserve(slots);
  std::vector<std::size_t> chosen(changed);
  std::vector<std::size_t> scratch(dim);
  for (std::size_t j = 0; j < generated; ++j) {
    std::vector<double> copy = cat.position;
    rng.sample_without_replacement(dim, chosen, scratch);
    for (std::size_t d : chosen) {
      const double r = rng.next_uniform();
      copy[d] = seeking_mutation(copy[d], r * params.srd, rng.next_sign());
    }
    clamp_position_inplace(copy, objective.bounds);
    costs.push_back(objective(copy, rng));
    candidates.push_back(std::move(copy));
  }
  if (params.spc) {
    candidates.push_back(cat.position);
    costs.push_back(cat.cost);
  }

  const std::vector<double> weights = roulette_probabilities(costs);
  const std::size_t pick = roulette_select(weights, rng);
  cat.position = std::move(candidates[pick]);
  cat.cost = costs[pick];
}

void cso_tracing_step(Cat& cat, std::span<const double> best_position, const CsoParams& params,
                      RngStream& rng, const Bounds& bounds, std::span<const double> vmax) {
  for (std::size_t d = 0; d < cat.position.size(); ++d) {
    const double r = rng.next_uniform();
    cat.velocity[d] += params.c1 * r * (best_position[d] - cat.position[d]);
  }
  clamp_velocity_inplace(cat.velocity, vmax);
  for (std::size_t d = 0; d < cat.position.size(); ++d) cat.position[d] += cat.velocity[d];
  clamp_position_inplace(cat.position, bounds);
}

RunResult cso_run(const ObjectiveSpec& objective, const RunConfig& config) {
  config.validate();
  if (config.algorithm != Algorithm::Cso) throw std::invalid_argument("cso_run: config is not CSO");
  const auto& params = std::get<CsoParams>(config.params);
  const auto start = std::chrono::steady_clock::now();

  const std::size_t n = config.population_size;
  RngStream rng(config.seed);
  std::vector<Cat> population = init_population(objective, n, rng, config.velocity_fraction);
  const std::vector<double> vmax = velocity_limits(objective.bounds, config.velocity_fraction);
  BestSoFar best = update_global_best(population, BestSoFar{});

  RunResult result;
  result.seed = config.seed;
  result.convergence.reserve(config.max_iter);
  if (config.record_diversity) result.diversity_trace.reserve(config.max_iter);

  for (std::size_t it = 1; it <= config.max_iter; ++it) {
    assign_modes_random(population, params.mr, rng);

    parallel_for(n, config.threads, [&](std::size_t k) {
      RngStream local = rng.child(it * n + k + 1);
      Cat& cat = population[k];
      if (cat.flag == Mode::Seeking) {
        cso_seeking_step(cat, params, local, objective);
      } else {
        cso_tracing_step(cat, best.position, params, local, objective.bounds, vmax);
        cat.cost = objective(cat.position, local);
      }
    });

    best = update_global_best(population, best);
    result.convergence.push_back(best.cost);
    if (config.record_diversity)
      result.diversity_trace.push_back(dimension_diversity(positions_of(population), it).div);
  }

  result.best_position = std::move(best.position);
  result.best_cost = best.cost;
  result.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

}  // namespace catswarm
