#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "catswarm/core.hpp"
#include "catswarm/params.hpp"

namespace catswarm {

/// Number of tracing cats for a mixture ratio: round-half-up(mr * N).
std::size_t tracing_count(double mr, std::size_t population_size) noexcept;

/// Flags exactly tracing_count(mr, N) cats, chosen uniformly without
/// replacement, as Tracing; the rest become Seeking. Order is preserved.
void assign_modes_random(std::vector<Cat>& population, double mr, RngStream& rng);

/// Roulette-wheel weights for minimization: |FS_i - FS_max| / (FS_max - FS_min),
/// all ones when every cost is equal, then normalized to sum to 1.
std::vector<double> roulette_probabilities(std::span<const double> costs);

/// Index drawn with probability proportional to `weights` (which sum to 1).
std::size_t roulette_select(std::span<const double> weights, RngStream& rng);

/// SRD-based seeking: SMP candidates (SMP-1 copies plus the current position
/// when SPC is on), mutated by (1 +- rand*SRD) * x, picked by roulette wheel.
void cso_seeking_step(Cat& cat, const CsoParams& params, RngStream& rng, const ObjectiveSpec& objective);

/// V <- V + c1*rand*(best - X), velocity clamp, X <- X + V, position clamp.
/// The caller re-evaluates the cost.
void cso_tracing_step(Cat& cat, std::span<const double> best_position, const CsoParams& params,
                      RngStream& rng, const Bounds& bounds, std::span<const double> vmax);

RunResult cso_run(const ObjectiveSpec& objective, const RunConfig& config);

}  // namespace catswarm
