#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "catswarm/core.hpp"
#include "catswarm/params.hpp"

namespace catswarm {

struct ModeCounts {
  std::size_t tracing = 0;
  std::size_t seeking = 0;
};

/// Tracing count floor(i*N / max_iter), never below 2; seeking takes the rest.
/// `iteration` is 1-based.
ModeCounts compute_mode_counts(std::size_t iteration, std::size_t population_size,
                               std::size_t max_iter);

/// Linear inertia schedule from w_max at the first iteration to w_min at the last.
double inertia_weight(std::size_t iteration, std::size_t max_iter, const DcsoParams& params);

/// Sorts the population by ascending cost (stable) and flags the first
/// `counts.seeking` cats Seeking and the rest Tracing.
void assign_modes_sorted(std::vector<Cat>& population, ModeCounts counts);

/// Number of dimensions a seeking copy mutates: round-half-up(cdc * D).
std::size_t mutated_dimension_count(double cdc, std::size_t dimension) noexcept;

/// (1 + sign * scale) * x, the multiplicative seeking mutation shared by
/// both cat swarm variants (scale = rand for DCSO, rand * SRD for CSO).
inline double seeking_mutation(double x, double scale, double sign) noexcept {
  return (1.0 + sign * scale) * x;
}

/// Inertia-weighted move towards `best_position`. Velocity is clamped to
/// +-vmax before the position update; the position is clamped to the box.
/// The caller re-evaluates the cost.
void tracing_step(Cat& cat, std::span<const double> best_position, double w,
                  const DcsoParams& params, RngStream& rng, const Bounds& bounds,
                  std::span<const double> vmax);

/// Greedy seeking: SMP mutated copies, the cheapest becomes the new position
/// (ties go to the earliest copy). With elitist_seeking the current position
/// wins ties against the copies.
void seeking_step(Cat& cat, const DcsoParams& params, RngStream& rng, const ObjectiveSpec& objective);

/// Index of the first minimum.
std::size_t select_greedy(std::span<const double> costs);

RunResult dcso_run(const ObjectiveSpec& objective, const RunConfig& config);

}  // namespace catswarm
