#include "catswarm/dcso.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>

#include "catswarm/diversity.hpp"
#include "catswarm/parallel.hpp"

namespace catswarm {

ModeCounts compute_mode_counts(std::size_t iteration, std::size_t population_size,
                               std::size_t max_iter) {
  if (iteration < 1 || iteration > max_iter)
    throw std::invalid_argument("compute_mode_counts: iteration outside [1, max_iter]");
  if (population_size < 3) throw std::invalid_argument("compute_mode_counts: population below 3");
  std::size_t tracing = iteration * population_size / max_iter;
  if (tracing <= 2) tracing = 2;
  tracing = std::min(tracing, population_size);
  return {tracing, population_size - tracing};
}

double inertia_weight(std::size_t iteration, std::size_t max_iter, const DcsoParams& params) {
  if (max_iter <= 1) return params.w_max;
  const double progress =
      static_cast<double>(iteration - 1) / static_cast<double>(max_iter - 1);
  return params.w_max - (params.w_max - params.w_min) * progress;
}

void assign_modes_sorted(std::vector<Cat>& population, ModeCounts counts) {
  if (counts.tracing + counts.seeking != population.size())
    throw std::invalid_argument("assign_modes_sorted: mode counts do not cover the population");
  std::stable_sort(population.begin(), population.end(),
                   [](const Cat& l, const Cat& r) { return l.cost < r.cost; });
  for (std::size_t k = 0; k < population.size(); ++k)
    population[k].flag = k < counts.seeking ? Mode::Seeking : Mode::Tracing;
}

std::size_t mutated_dimension_count(double cdc, std::size_t dimension) noexcept {
  const double raw = std::floor(cdc * static_cast<double>(dimension) + 0.5);
  return std::min(dimension, static_cast<std::size_t>(std::max(0.0, raw)));
}

std::size_t select_greedy(std::span<const double> costs) {
  if (costs.empty()) throw std::invalid_argument("select_greedy: no candidates");
  return static_cast<std::size_t>(std::min_element(costs.begin(), costs.end()) - costs.begin());
}

void tracing_step(Cat& cat, std::span<const double> best_position, double w,
                  const DcsoParams& params, RngStream& rng, const Bounds& bounds,
                  std::span<const double> vmax) {
  const std::size_t dim = cat.position.size();
  const double shared_rand = params.rand_per_dimension ? 0.0 : rng.next_uniform();
  for (std::size_t d = 0; d < dim; ++d) {
    const double r = params.rand_per_dimension ? rng.next_uniform() : shared_rand;
    cat.velocity[d] = w * cat.velocity[d] + params.c1 * r * (best_position[d] - cat.position[d]);
  }
  clamp_velocity_inplace(cat.velocity, vmax);
  for (std::size_t d = 0; d < dim; ++d) cat.position[d] += cat.velocity[d];
  clamp_position_inplace(cat.position, bounds);
}

void seeking_step(Cat& cat, const DcsoParams& params, RngStream& rng, const ObjectiveSpec& objective) {
  const std::size_t dim = cat.position.size();
  const std::size_t copies = static_cast<std::size_t>(params.smp);
  const std::size_t changed = mutated_dimension_count(params.cdc, dim);

  std::vector<std::vector<double>> candidates(copies, cat.position);
  std::vector<double> costs(copies);
  std::vector<std::size_t> chosen(changed);
  std::vector<std::size_t> scratch(dim);
  for (std::size_t j = 0; j < copies; ++j) {
    std::vector<double>& copy = candidates[j];
    rng.sample_without_replacement(dim, chosen, scratch);
    for (std::size_t d : chosen) {
      const double r = rng.next_uniform();
      copy[d] = seeking_mutation(copy[d], r, rng.next_sign());
    }
    clamp_position_inplace(copy, objective.bounds);
    costs[j] = objective(copy, rng);
  }

  const std::size_t best = select_greedy(costs);
  if (params.elitist_seeking && cat.cost <= costs[best]) return;
  cat.position = std::move(candidates[best]);
  cat.cost = costs[best];
}

RunResult dcso_run(const ObjectiveSpec& objective, const RunConfig& config) {
  config.validate();
  if (config.algorithm != Algorithm::Dcso) throw std::invalid_argument("dcso_run: config is not DCSO");
  const auto& params = std::get<DcsoParams>(config.params);
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
    assign_modes_sorted(population, compute_mode_counts(it, n, config.max_iter));
    const double w = inertia_weight(it, config.max_iter, params);

    parallel_for(n, config.threads, [&](std::size_t k) {
      RngStream local = rng.child(it * n + k + 1);
      Cat& cat = population[k];
      if (cat.flag == Mode::Seeking) {
        seeking_step(cat, params, local, objective);
      } else {
        tracing_step(cat, best.position, w, params, local, objective.bounds, vmax);
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
