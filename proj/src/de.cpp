#include "catswarm/de.hpp"

#include <chrono>
#include <stdexcept>

#include "catswarm/diversity.hpp"
#include "catswarm/parallel.hpp"

namespace catswarm {

std::array<std::size_t, 3> pick_donors(std::size_t target, std::size_t population_size, RngStream& rng) {
  if (population_size < 4) throw std::invalid_argument("de: population must hold at least 4 individuals");
  std::array<std::size_t, 3> donors{};
  for (std::size_t slot = 0; slot < 3; ++slot) {
    for (;;) {
      const auto candidate = static_cast<std::size_t>(rng.next_below(population_size));
      bool clash = candidate == target;
      for (std::size_t prev = 0; prev < slot; ++prev) clash = clash || donors[prev] == candidate;
      if (!clash) {
        donors[slot] = candidate;
        break;
      }
    }
  }
  return donors;
}

std::vector<double> de_trial_vector(std::size_t target, const std::array<std::size_t, 3>& donors,
                                    const std::vector<Cat>& population, const DeParams& params,
                                    RngStream& rng, const Bounds& bounds) {
  const std::vector<double>& base = population[donors[0]].position;
  const std::vector<double>& x2 = population[donors[1]].position;
  const std::vector<double>& x3 = population[donors[2]].position;
  const std::vector<double>& current = population[target].position;
  const std::size_t dim = current.size();

  const double scale = rng.next_uniform(params.beta_min, params.beta_max);
  const auto forced = static_cast<std::size_t>(rng.next_below(dim));
  std::vector<double> trial(dim);
  for (std::size_t d = 0; d < dim; ++d) {
    const bool take_mutant = d == forced || rng.next_uniform() < params.crossover_rate;
    trial[d] = take_mutant ? base[d] + scale * (x2[d] - x3[d]) : current[d];
  }
  clamp_position_inplace(trial, bounds);
  return trial;
}

std::vector<double> de_trial_vector(std::size_t target, const std::vector<Cat>& population,
                                    const DeParams& params, RngStream& rng, const Bounds& bounds) {
  const auto donors = pick_donors(target, population.size(), rng);
  return de_trial_vector(target, donors, population, params, rng, bounds);
}

void de_generation(std::vector<Cat>& population, std::size_t generation, const DeParams& params,
                   const RngStream& rng, const ObjectiveSpec& objective, int threads) {
  const std::size_t n = population.size();
  std::vector<std::vector<double>> trials(n);
  std::vector<double> trial_costs(n);
  parallel_for(n, threads, [&](std::size_t k) {
    RngStream local = rng.child(generation * n + k + 1);
    trials[k] = de_trial_vector(k, population, params, local, objective.bounds);
    trial_costs[k] = objective(trials[k], local);
  });
  for (std::size_t k = 0; k < n; ++k) {
    if (trial_costs[k] <= population[k].cost) {
      population[k].position = std::move(trials[k]);
      population[k].cost = trial_costs[k];
    }
  }
}

RunResult de_run(const ObjectiveSpec& objective, const RunConfig& config) {
  config.validate();
  if (config.algorithm != Algorithm::De) throw std::invalid_argument("de_run: config is not DE");
  const auto& params = std::get<DeParams>(config.params);
  const auto start = std::chrono::steady_clock::now();

  RngStream rng(config.seed);
  std::vector<Cat> population =
      init_population(objective, config.population_size, rng, config.velocity_fraction);
  BestSoFar best = update_global_best(population, BestSoFar{});

  RunResult result;
  result.seed = config.seed;
  result.convergence.reserve(config.max_iter);
  if (config.record_diversity) result.diversity_trace.reserve(config.max_iter);

  for (std::size_t gen = 1; gen <= config.max_iter; ++gen) {
    de_generation(population, gen, params, rng, objective, config.threads);
    best = update_global_best(population, best);
    result.convergence.push_back(best.cost);
    if (config.record_diversity)
      result.diversity_trace.push_back(dimension_diversity(positions_of(population), gen).div);
  }

  result.best_position = std::move(best.position);
  result.best_cost = best.cost;
  result.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

}  // namespace catswarm
