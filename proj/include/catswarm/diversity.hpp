#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace catswarm {

/// Dimension-wise population diversity around the per-dimension median.
struct DiversitySnapshot {
  std::vector<double> div_per_dim;  // mean |median_j - x_ij| over agents
  double div = 0.0;                 // mean of div_per_dim
  std::size_t iteration = 0;
};

/// Exploration / exploitation percentages; they always sum to 100.
struct PhaseBalance {
  double xpl_percent = 0.0;
  double xpt_percent = 0.0;
};

/// Median of a sample (mean of the two central values for even counts).
double median(std::vector<double> values);

/// `positions` holds one row per agent, all of equal length D >= 1.
DiversitySnapshot dimension_diversity(std::span<const std::vector<double>> positions,
                                      std::size_t iteration = 0);

/// Per-iteration XPL% and XPT% relative to the largest diversity of the trace.
std::vector<PhaseBalance> phase_series(std::span<const double> div_trace);

/// Trace-averaged XPL% / XPT%. A trace that never rises above zero is
/// reported as fully exploitative (0 / 100).
PhaseBalance phase_balance(std::span<const double> div_trace);

}  // namespace catswarm
