#include "catswarm/statistics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace catswarm {

double mean(std::span<const double> sample) {
  if (sample.empty()) throw std::invalid_argument("mean: empty sample");
  return std::accumulate(sample.begin(), sample.end(), 0.0) / static_cast<double>(sample.size());
}

double sample_std(std::span<const double> sample) {
  if (sample.size() < 2) return 0.0;
  const double m = mean(sample);
  double ss = 0.0;
  for (double x : sample) ss += (x - m) * (x - m);
  return std::sqrt(ss / static_cast<double>(sample.size() - 1));
}

std::vector<double> midranks(std::span<const double> values) {
  const std::size_t n = values.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t l, std::size_t r) { return values[l] < values[r]; });
  std::vector<double> ranks(n);
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i + 1;
    while (j < n && values[order[j]] == values[order[i]]) ++j;
    // positions i..j-1 hold ranks i+1..j
    const double shared = 0.5 * static_cast<double>(i + 1 + j);
    for (std::size_t k = i; k < j; ++k) ranks[order[k]] = shared;
    i = j;
  }
  return ranks;
}

namespace {

struct Pooled {
  std::vector<double> ranks;  // first n entries belong to sample a
  std::size_t n = 0;
  std::size_t m = 0;
  double rank_sum = 0.0;
};

Pooled pool(std::span<const double> a, std::span<const double> b) {
  if (a.empty() || b.empty()) throw std::invalid_argument("rank-sum test: empty sample");
  std::vector<double> values(a.begin(), a.end());
  values.insert(values.end(), b.begin(), b.end());
  Pooled p;
  p.ranks = midranks(values);
  p.n = a.size();
  p.m = b.size();
  p.rank_sum = std::accumulate(p.ranks.begin(), p.ranks.begin() + static_cast<std::ptrdiff_t>(p.n), 0.0);
  return p;
}

}  // namespace

double rank_sum_exact_p(std::span<const double> a, std::span<const double> b) {
  const Pooled p = pool(a, b);
  const std::size_t total = p.n + p.m;
  // Doubled midranks are integers, so the rank-sum distribution lives on a
  // small integer lattice: count subsets by (size, doubled sum).
  std::vector<long> twice(total);
  long max_sum = 0;
  for (std::size_t i = 0; i < total; ++i) {
    twice[i] = std::lround(2.0 * p.ranks[i]);
    max_sum += twice[i];
  }
  const std::size_t width = static_cast<std::size_t>(max_sum) + 1;
  std::vector<double> count((p.n + 1) * width, 0.0);
  count[0] = 1.0;
  for (std::size_t i = 0; i < total; ++i) {
    const auto r = static_cast<std::size_t>(twice[i]);
    for (std::size_t k = std::min(i + 1, p.n); k >= 1; --k) {
      for (std::size_t s = width - 1; s >= r; --s) {
        count[k * width + s] += count[(k - 1) * width + s - r];
        if (s == r) break;
      }
    }
  }
  const long expected_twice = static_cast<long>(p.n * (total + 1));  // 2 * n(N+1)/2
  const long observed_twice = std::lround(2.0 * p.rank_sum);
  const long observed_dev = std::labs(observed_twice - expected_twice);
  double hits = 0.0;
  double all = 0.0;
  for (std::size_t s = 0; s < width; ++s) {
    const double c = count[p.n * width + s];
    if (c == 0.0) continue;
    all += c;
    if (std::labs(static_cast<long>(s) - expected_twice) >= observed_dev) hits += c;
  }
  return std::min(1.0, hits / all);
}

double rank_sum_normal_p(std::span<const double> a, std::span<const double> b) {
  const Pooled p = pool(a, b);
  const double n = static_cast<double>(p.n);
  const double m = static_cast<double>(p.m);
  const double total = n + m;

  std::vector<double> sorted = p.ranks;
  std::sort(sorted.begin(), sorted.end());
  double tie_term = 0.0;
  for (std::size_t i = 0; i < sorted.size();) {
    std::size_t j = i + 1;
    while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
    const double t = static_cast<double>(j - i);
    tie_term += t * t * t - t;
    i = j;
  }
  const double variance = n * m / 12.0 * ((total + 1.0) - tie_term / (total * (total - 1.0)));
  if (variance <= 0.0) return 1.0;

  const double u = p.rank_sum - n * (n + 1.0) / 2.0;
  const double deviation = std::max(0.0, std::abs(u - n * m / 2.0) - 0.5);
  const double z = deviation / std::sqrt(variance);
  return std::min(1.0, std::erfc(z / std::sqrt(2.0)));
}

RankSumResult rank_sum_test(std::span<const double> a, std::span<const double> b) {
  const Pooled p = pool(a, b);
  RankSumResult result;
  result.rank_sum = p.rank_sum;
  result.u = p.rank_sum - static_cast<double>(p.n * (p.n + 1)) / 2.0;
  result.exact = p.n + p.m <= kExactRankSumLimit;
  result.p_value = result.exact ? rank_sum_exact_p(a, b) : rank_sum_normal_p(a, b);
  return result;
}

double wilcoxon_rank_sum(std::span<const double> a, std::span<const double> b) {
  return rank_sum_test(a, b).p_value;
}

FriedmanRanks friedman_ranks(const std::vector<std::vector<double>>& means,
                             std::optional<std::span<const double>> reference) {
  if (means.empty()) throw std::invalid_argument("friedman_ranks: no functions");
  const std::size_t algorithms = means.front().size();
  if (algorithms == 0) throw std::invalid_argument("friedman_ranks: no algorithms");
  if (reference && reference->size() != means.size())
    throw std::invalid_argument("friedman_ranks: one reference value per function is required");

  FriedmanRanks out;
  out.average.assign(algorithms, 0.0);
  std::vector<double> scores(algorithms);
  for (std::size_t f = 0; f < means.size(); ++f) {
    if (means[f].size() != algorithms) throw std::invalid_argument("friedman_ranks: ragged table");
    for (std::size_t a = 0; a < algorithms; ++a)
      scores[a] = reference ? std::abs(means[f][a] - (*reference)[f]) : means[f][a];
    out.per_function.push_back(midranks(scores));
    for (std::size_t a = 0; a < algorithms; ++a) out.average[a] += out.per_function.back()[a];
  }
  for (double& r : out.average) r /= static_cast<double>(means.size());
  return out;
}

}  // namespace catswarm
