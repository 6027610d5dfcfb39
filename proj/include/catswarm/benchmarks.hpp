#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "catswarm/core.hpp"

namespace catswarm {

enum class BenchmarkFamily { Classical, Cec2019 };

/// F1..F23 (classical) or CEC01..CEC10.
struct BenchmarkId {
  BenchmarkFamily family = BenchmarkFamily::Classical;
  int index = 1;

  friend bool operator==(const BenchmarkId&, const BenchmarkId&) = default;
};

/// Parses "F7", "f7", "CEC04", "Cec4". Returns nullopt for anything else.
std::optional<BenchmarkId> parse_benchmark_id(std::string_view text);
std::string to_string(BenchmarkId id);

struct BenchmarkMeta {
  BenchmarkId id;
  std::size_t dimension = 0;
  double lower = 0.0;
  double upper = 0.0;
  double f_min = 0.0;    // reference value as listed in the function tables
  double optimum = 0.0;  // best known global minimum value
  bool noisy = false;
  std::string title;
};

/// Throws std::invalid_argument for ids outside the family range.
BenchmarkMeta benchmark_metadata(BenchmarkId id);

/// All 33 functions, classical first.
std::vector<BenchmarkId> all_benchmarks();

/// Classical function value. F7 adds uniform noise drawn from `noise`.
double eval_classical(int index, std::span<const double> x, RngStream& noise);

/// Optional CEC shift vector and rotation matrix (row-major, D x D).
struct CecTransform {
  std::vector<double> shift;
  std::vector<double> rotation;
};

/// Reads whitespace-separated reals. Takes the first D values of the shift
/// file and the first D*D of the rotation file. An empty rotation path means
/// no rotation; a rotation path that does not exist is an error.
CecTransform load_cec_transform(const std::string& shift_path, const std::string& rotation_path,
                                std::size_t dimension);

/// CEC-2019 function value including the +1 bias. Without a transform the
/// unshifted base function is evaluated.
double eval_cec(int index, std::span<const double> x, const CecTransform* transform = nullptr);

/// Box-bounded objective for a benchmark.
ObjectiveSpec make_benchmark_objective(BenchmarkId id, std::optional<CecTransform> transform = std::nullopt);

}  // namespace catswarm
