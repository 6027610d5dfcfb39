#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace catswarm {

double mean(std::span<const double> sample);
/// Sample standard deviation (n - 1 denominator); 0 for a single value.
double sample_std(std::span<const double> sample);

/// Ascending ranks starting at 1; tied values share the mean of the ranks
/// they cover.
std::vector<double> midranks(std::span<const double> values);

struct RankSumResult {
  double rank_sum = 0.0;  // sum of the first sample's midranks
  double u = 0.0;         // rank_sum - n(n+1)/2
  double p_value = 1.0;   // two-sided
  bool exact = false;
};

/// Pooled sizes up to this use the exact permutation distribution.
inline constexpr std::size_t kExactRankSumLimit = 12;

/// Two-sided Wilcoxon rank-sum (Mann-Whitney) test with midranks.
RankSumResult rank_sum_test(std::span<const double> a, std::span<const double> b);

/// Shorthand for rank_sum_test(a, b).p_value.
double wilcoxon_rank_sum(std::span<const double> a, std::span<const double> b);

/// Exact conditional p-value over all C(n+m, n) rank arrangements.
double rank_sum_exact_p(std::span<const double> a, std::span<const double> b);

/// Normal approximation with tie and continuity correction.
double rank_sum_normal_p(std::span<const double> a, std::span<const double> b);

struct FriedmanRanks {
  std::vector<std::vector<double>> per_function;  // F x A, 1 = best
  std::vector<double> average;                    // column means, length A
};

/// Ranks algorithms per function (row) by ascending score; ties share the
/// average rank. The score is the mean itself, or |mean - reference[f]| when
/// per-function reference optima are supplied.
FriedmanRanks friedman_ranks(const std::vector<std::vector<double>>& means,
                             std::optional<std::span<const double>> reference = std::nullopt);

}  // namespace catswarm
