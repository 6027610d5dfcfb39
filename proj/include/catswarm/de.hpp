#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "catswarm/core.hpp"
#include "catswarm/params.hpp"

namespace catswarm {

/// Three pairwise-distinct donor indices, all different from `target`.
std::array<std::size_t, 3> pick_donors(std::size_t target, std::size_t population_size, RngStream& rng);

/// DE/rand/1/bin trial for `target`: v = x_r1 + F (x_r2 - x_r3) with F drawn
/// uniformly from [beta_min, beta_max], binomial crossover with one forced
/// dimension, clamped to the box. Needs a population of at least 4.
std::vector<double> de_trial_vector(std::size_t target, const std::vector<Cat>& population,
                                    const DeParams& params, RngStream& rng, const Bounds& bounds);

/// Same as above with explicit donors, for callers that pick them elsewhere.
std::vector<double> de_trial_vector(std::size_t target, const std::array<std::size_t, 3>& donors,
                                    const std::vector<Cat>& population, const DeParams& params,
                                    RngStream& rng, const Bounds& bounds);

/// One synchronous generation: every trial is built from the parent
/// population, then replaces its target iff trial cost <= target cost.
/// `generation` selects the child random streams.
void de_generation(std::vector<Cat>& population, std::size_t generation, const DeParams& params,
                   const RngStream& rng, const ObjectiveSpec& objective, int threads = 1);

RunResult de_run(const ObjectiveSpec& objective, const RunConfig& config);

}  // namespace catswarm
