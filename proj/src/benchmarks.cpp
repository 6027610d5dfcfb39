#include "catswarm/benchmarks.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <fstream>
#include <stdexcept>

namespace catswarm {

namespace {

struct Row {
  std::size_t dimension;
  double lower;
  double upper;
  double f_min;
  double optimum;
  const char* title;
};

// F19 is searched on [0, 1]^3: the listed [1, 3] box excludes the optimum.
constexpr std::array<Row, 23> kClassical = {{
    {30, -100.0, 100.0, 0.0, 0.0, "Sphere"},
    {30, -10.0, 10.0, 0.0, 0.0, "Schwefel 2.22"},
    {30, -100.0, 100.0, 0.0, 0.0, "Schwefel 1.2"},
    {30, -100.0, 100.0, 0.0, 0.0, "Schwefel 2.21"},
    {30, -30.0, 30.0, 0.0, 0.0, "Rosenbrock"},
    {30, -100.0, 100.0, 0.0, 0.0, "Step"},
    {30, -1.28, 1.28, 0.0, 0.0, "Quartic with noise"},
    {30, -500.0, 500.0, -418.9829 * 5.0, -418.9828872724338 * 30.0, "Schwefel 2.26"},
    {30, -5.12, 5.12, 0.0, 0.0, "Rastrigin"},
    {30, -32.0, 32.0, 0.0, 0.0, "Ackley"},
    {30, -600.0, 600.0, 0.0, 0.0, "Griewank"},
    {30, -50.0, 50.0, 0.0, 0.0, "Penalized 1"},
    {30, -50.0, 50.0, 0.0, 0.0, "Penalized 2"},
    {2, -65.0, 65.0, 1.0, 0.9980038377944496, "Shekel foxholes"},
    {4, -5.0, 5.0, 0.00030, 0.00030748598780560, "Kowalik"},
    {2, -5.0, 5.0, -1.398, -1.0316284534898774, "Six-hump camel"},
    {2, -5.0, 5.0, 0.398, 0.39788735772973816, "Branin"},
    {2, -2.0, 2.0, 3.0, 3.0, "Goldstein-Price"},
    {3, 0.0, 1.0, -3.86, -3.8627821478207558, "Hartmann 3"},
    {6, 0.0, 1.0, -3.32, -3.3223680114155147, "Hartmann 6"},
    {4, 0.0, 10.0, -10.1532, -10.153199679058231, "Shekel 5"},
    {4, 0.0, 10.0, -10.4028, -10.402940566818664, "Shekel 7"},
    {4, 0.0, 10.0, -10.5363, -10.536409816692046, "Shekel 10"},
}};

constexpr std::array<Row, 10> kCec = {{
    {9, -8192.0, 8192.0, 1.0, 1.0, "Storn's Chebyshev polynomial fitting"},
    {16, -16384.0, 16384.0, 1.0, 1.0, "Inverse Hilbert matrix"},
    {18, -4.0, 4.0, 1.0, 1.0, "Lennard-Jones minimum energy cluster"},
    {10, -100.0, 100.0, 1.0, 1.0, "Rastrigin"},
    {10, -100.0, 100.0, 1.0, 1.0, "Griewank"},
    {10, -100.0, 100.0, 1.0, 1.0, "Weierstrass"},
    {10, -100.0, 100.0, 1.0, 1.0, "Modified Schwefel"},
    {10, -100.0, 100.0, 1.0, 1.0, "Expanded Schaffer F6"},
    {10, -100.0, 100.0, 1.0, 1.0, "Happy cat"},
    {10, -100.0, 100.0, 1.0, 1.0, "Ackley"},
}};

std::vector<double> read_reals(const std::string& path, std::size_t count) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open CEC data file: " + path);
  std::vector<double> values;
  values.reserve(count);
  double v = 0.0;
  while (values.size() < count && in >> v) values.push_back(v);
  if (values.size() < count)
    throw std::runtime_error(path + ": expected at least " + std::to_string(count) + " values, found " +
                             std::to_string(values.size()));
  return values;
}

}  // namespace

std::optional<BenchmarkId> parse_benchmark_id(std::string_view text) {
  std::string upper(text);
  std::transform(upper.begin(), upper.end(), upper.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  BenchmarkId id;
  std::string_view digits;
  if (upper.starts_with("CEC")) {
    id.family = BenchmarkFamily::Cec2019;
    digits = std::string_view(upper).substr(3);
  } else if (upper.starts_with("F")) {
    id.family = BenchmarkFamily::Classical;
    digits = std::string_view(upper).substr(1);
  } else {
    return std::nullopt;
  }
  if (digits.empty()) return std::nullopt;
  const auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), id.index);
  if (ec != std::errc{} || end != digits.data() + digits.size()) return std::nullopt;
  const int limit = id.family == BenchmarkFamily::Classical ? 23 : 10;
  if (id.index < 1 || id.index > limit) return std::nullopt;
  return id;
}

std::string to_string(BenchmarkId id) {
  if (id.family == BenchmarkFamily::Classical) return "F" + std::to_string(id.index);
  return (id.index < 10 ? "CEC0" : "CEC") + std::to_string(id.index);
}

BenchmarkMeta benchmark_metadata(BenchmarkId id) {
  const bool classical = id.family == BenchmarkFamily::Classical;
  const int limit = classical ? 23 : 10;
  if (id.index < 1 || id.index > limit)
    throw std::invalid_argument("benchmark index out of range: " + std::to_string(id.index));
  const Row& row = classical ? kClassical[static_cast<std::size_t>(id.index - 1)]
                             : kCec[static_cast<std::size_t>(id.index - 1)];
  BenchmarkMeta meta;
  meta.id = id;
  meta.dimension = row.dimension;
  meta.lower = row.lower;
  meta.upper = row.upper;
  meta.f_min = row.f_min;
  meta.optimum = row.optimum;
  meta.noisy = classical && id.index == 7;
  meta.title = row.title;
  return meta;
}

std::vector<BenchmarkId> all_benchmarks() {
  std::vector<BenchmarkId> ids;
  for (int i = 1; i <= 23; ++i) ids.push_back({BenchmarkFamily::Classical, i});
  for (int i = 1; i <= 10; ++i) ids.push_back({BenchmarkFamily::Cec2019, i});
  return ids;
}

CecTransform load_cec_transform(const std::string& shift_path, const std::string& rotation_path,
                                std::size_t dimension) {
  CecTransform t;
  if (!shift_path.empty()) t.shift = read_reals(shift_path, dimension);
  if (!rotation_path.empty()) t.rotation = read_reals(rotation_path, dimension * dimension);
  return t;
}

ObjectiveSpec make_benchmark_objective(BenchmarkId id, std::optional<CecTransform> transform) {
  const BenchmarkMeta meta = benchmark_metadata(id);
  ObjectiveSpec spec{to_string(id), Bounds::uniform(meta.dimension, meta.lower, meta.upper), {}};
  if (id.family == BenchmarkFamily::Classical) {
    if (transform) throw std::invalid_argument(spec.name + ": classical functions take no transform");
    spec.evaluate = [index = id.index](std::span<const double> x, RngStream& rng) {
      return eval_classical(index, x, rng);
    };
  } else {
    spec.evaluate = [index = id.index, t = std::move(transform)](std::span<const double> x, RngStream&) {
      return eval_cec(index, x, t ? &*t : nullptr);
    };
  }
  return spec;
}

}  // namespace catswarm
