#include "catswarm/diversity.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace catswarm {

double median(std::vector<double> values) {
  if (values.empty()) throw std::invalid_argument("median: empty sample");
  const std::size_t n = values.size();
  const auto mid = values.begin() + static_cast<std::ptrdiff_t>(n / 2);
  std::nth_element(values.begin(), mid, values.end());
  if (n % 2 == 1) return *mid;
  const double upper = *mid;
  const double lower = *std::max_element(values.begin(), mid);
  return 0.5 * (lower + upper);
}

DiversitySnapshot dimension_diversity(std::span<const std::vector<double>> positions,
                                      std::size_t iteration) {
  if (positions.empty()) throw std::invalid_argument("dimension_diversity: empty population");
  const std::size_t n = positions.size();
  const std::size_t dim = positions.front().size();
  if (dim == 0) throw std::invalid_argument("dimension_diversity: zero-dimensional agents");
  for (const auto& row : positions) {
    if (row.size() != dim) throw std::invalid_argument("dimension_diversity: ragged population");
  }

  DiversitySnapshot snap;
  snap.iteration = iteration;
  snap.div_per_dim.resize(dim);
  std::vector<double> column(n);
  for (std::size_t j = 0; j < dim; ++j) {
    for (std::size_t i = 0; i < n; ++i) column[i] = positions[i][j];
    const double center = median(column);
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) total += std::abs(center - positions[i][j]);
    snap.div_per_dim[j] = total / static_cast<double>(n);
  }
  double sum = 0.0;
  for (double v : snap.div_per_dim) sum += v;
  snap.div = sum / static_cast<double>(dim);
  return snap;
}

std::vector<PhaseBalance> phase_series(std::span<const double> div_trace) {
  if (div_trace.empty()) throw std::invalid_argument("phase_series: empty trace");
  const double div_max = *std::max_element(div_trace.begin(), div_trace.end());
  std::vector<PhaseBalance> out(div_trace.size());
  for (std::size_t i = 0; i < div_trace.size(); ++i) {
    if (div_max <= 0.0) {
      out[i] = {0.0, 100.0};
      continue;
    }
    const double xpl = 100.0 * div_trace[i] / div_max;
    out[i] = {xpl, 100.0 * std::abs(div_trace[i] - div_max) / div_max};
  }
  return out;
}

PhaseBalance phase_balance(std::span<const double> div_trace) {
  const std::vector<PhaseBalance> series = phase_series(div_trace);
  PhaseBalance avg;
  for (const PhaseBalance& p : series) {
    avg.xpl_percent += p.xpl_percent;
    avg.xpt_percent += p.xpt_percent;
  }
  avg.xpl_percent /= static_cast<double>(series.size());
  avg.xpt_percent /= static_cast<double>(series.size());
  return avg;
}

}  // namespace catswarm
