#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "catswarm/benchmarks.hpp"

namespace catswarm {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kBias = 1.0;

// Storn's Chebyshev fitting problem. The candidate polynomial must stay in
// [-1, 1] on [-1, 1] and reach at least T_{D-1}(1.2) at +-1.2.
double chebyshev(std::span<const double> x) {
  const std::size_t dim = x.size();
  double t_prev = 1.0;
  double t_cur = 1.2;
  for (std::size_t k = 1; k + 1 < dim; ++k) {
    const double next = 2.4 * t_cur - t_prev;
    t_prev = t_cur;
    t_cur = next;
  }
  const double target = t_cur;

  auto horner = [&](double at) {
    double acc = x[0];
    for (std::size_t j = 1; j < dim; ++j) acc = acc * at + x[j];
    return acc;
  };

  double total = 0.0;
  const double u = horner(1.2);
  if (u < target) total += (u - target) * (u - target);
  const double v = horner(-1.2);
  if (v < target) total += (v - target) * (v - target);

  const std::size_t samples = 32 * dim;
  for (std::size_t k = 0; k <= samples; ++k) {
    const double at = 2.0 * static_cast<double>(k) / static_cast<double>(samples) - 1.0;
    const double w = horner(at);
    if (w > 1.0) total += (w - 1.0) * (w - 1.0);
    else if (w < -1.0) total += (w + 1.0) * (w + 1.0);
  }
  return total;
}

// Sum of |H Z - I| where Z is x reshaped row-major into a square matrix.
double inverse_hilbert(std::span<const double> x) {
  const auto side = static_cast<std::size_t>(std::lround(std::sqrt(static_cast<double>(x.size()))));
  double total = 0.0;
  for (std::size_t i = 0; i < side; ++i) {
    for (std::size_t k = 0; k < side; ++k) {
      double entry = 0.0;
      for (std::size_t j = 0; j < side; ++j)
        entry += x[j * side + k] / static_cast<double>(i + j + 1);
      if (i == k) entry -= 1.0;
      total += std::abs(entry);
    }
  }
  return total;
}

// Lennard-Jones energy of D/3 atoms, offset by the known minimum for 6 atoms.
double lennard_jones(std::span<const double> x) {
  const std::size_t atoms = x.size() / 3;
  double energy = 0.0;
  for (std::size_t i = 0; i + 1 < atoms; ++i) {
    for (std::size_t j = i + 1; j < atoms; ++j) {
      double sq = 0.0;
      for (std::size_t c = 0; c < 3; ++c) {
        const double diff = x[3 * i + c] - x[3 * j + c];
        sq += diff * diff;
      }
      const double r6 = sq * sq * sq;
      energy += (1.0 / r6 - 2.0) / r6;
    }
  }
  return energy + 12.7120622568;
}

double rastrigin(std::span<const double> z) {
  double s = 0.0;
  for (double v : z) s += v * v - 10.0 * std::cos(2.0 * kPi * v) + 10.0;
  return s;
}

double griewank(std::span<const double> z) {
  double s = 0.0;
  double p = 1.0;
  for (std::size_t i = 0; i < z.size(); ++i) {
    s += z[i] * z[i];
    p *= std::cos(z[i] / std::sqrt(static_cast<double>(i + 1)));
  }
  return s / 4000.0 - p + 1.0;
}

double weierstrass(std::span<const double> z) {
  constexpr double a = 0.5;
  constexpr double b = 3.0;
  constexpr int k_max = 20;
  double s = 0.0;
  double offset = 0.0;
  for (int k = 0; k <= k_max; ++k) offset += std::pow(a, k) * std::cos(kPi * std::pow(b, k));
  for (double v : z) {
    for (int k = 0; k <= k_max; ++k)
      s += std::pow(a, k) * std::cos(2.0 * kPi * std::pow(b, k) * (v + 0.5));
  }
  return s - static_cast<double>(z.size()) * offset;
}

double modified_schwefel(std::span<const double> z) {
  const auto dim = static_cast<double>(z.size());
  double s = 0.0;
  for (double raw : z) {
    const double v = raw + 420.9687462275036;
    if (v > 500.0) {
      const double m = 500.0 - std::fmod(v, 500.0);
      s += m * std::sin(std::sqrt(std::abs(m))) - (v - 500.0) * (v - 500.0) / (10000.0 * dim);
    } else if (v < -500.0) {
      const double m = std::fmod(std::abs(v), 500.0) - 500.0;
      s += m * std::sin(std::sqrt(std::abs(m))) - (v + 500.0) * (v + 500.0) / (10000.0 * dim);
    } else {
      s += v * std::sin(std::sqrt(std::abs(v)));
    }
  }
  return 418.9828872724338 * dim - s;
}

double expanded_schaffer_f6(std::span<const double> z) {
  auto g = [](double a, double b) {
    const double sq = a * a + b * b;
    const double sn = std::sin(std::sqrt(sq));
    const double den = 1.0 + 0.001 * sq;
    return 0.5 + (sn * sn - 0.5) / (den * den);
  };
  double s = 0.0;
  for (std::size_t i = 0; i < z.size(); ++i) s += g(z[i], z[(i + 1) % z.size()]);
  return s;
}

double happy_cat(std::span<const double> z) {
  const auto dim = static_cast<double>(z.size());
  double sq = 0.0;
  double sum = 0.0;
  for (double raw : z) {
    const double v = raw - 1.0;
    sq += v * v;
    sum += v;
  }
  return std::pow(std::abs(sq - dim), 0.25) + (0.5 * sq + sum) / dim + 0.5;
}

double ackley(std::span<const double> z) {
  const auto dim = static_cast<double>(z.size());
  double sq = 0.0;
  double cs = 0.0;
  for (double v : z) {
    sq += v * v;
    cs += std::cos(2.0 * kPi * v);
  }
  return -20.0 * std::exp(-0.2 * std::sqrt(sq / dim)) - std::exp(cs / dim) + 20.0 + std::numbers::e;
}

// Scale applied to (x - shift) before rotation, per function.
double cec_scale(int index) {
  switch (index) {
    case 4: return 5.12 / 100.0;
    case 5: return 600.0 / 100.0;
    case 6: return 0.5 / 100.0;
    case 7: return 1000.0 / 100.0;
    case 9: return 5.0 / 100.0;
    default: return 1.0;
  }
}

std::vector<double> transformed(int index, std::span<const double> x, const CecTransform* transform) {
  const std::size_t dim = x.size();
  const double rate = cec_scale(index);
  std::vector<double> z(dim);
  for (std::size_t d = 0; d < dim; ++d) {
    const double shift = transform != nullptr && !transform->shift.empty() ? transform->shift[d] : 0.0;
    z[d] = rate * (x[d] - shift);
  }
  if (transform == nullptr || transform->rotation.empty()) return z;
  std::vector<double> rotated(dim, 0.0);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) rotated[i] += transform->rotation[i * dim + j] * z[j];
  return rotated;
}

}  // namespace

double eval_cec(int index, std::span<const double> x, const CecTransform* transform) {
  const BenchmarkMeta meta = benchmark_metadata({BenchmarkFamily::Cec2019, index});
  if (x.size() != meta.dimension)
    throw std::invalid_argument("CEC" + std::to_string(index) + ": expected dimension " +
                                std::to_string(meta.dimension) + ", got " + std::to_string(x.size()));
  if (index <= 3) {
    if (transform != nullptr && (!transform->shift.empty() || !transform->rotation.empty()))
      throw std::invalid_argument("CEC" + std::to_string(index) + " takes no shift or rotation");
    switch (index) {
      case 1: return chebyshev(x) + kBias;
      case 2: return inverse_hilbert(x) + kBias;
      default: return lennard_jones(x) + kBias;
    }
  }
  if (transform != nullptr) {
    if (!transform->shift.empty() && transform->shift.size() != x.size())
      throw std::invalid_argument("CEC shift vector has the wrong length");
    if (!transform->rotation.empty() && transform->rotation.size() != x.size() * x.size())
      throw std::invalid_argument("CEC rotation matrix has the wrong size");
  }
  const std::vector<double> z = transformed(index, x, transform);
  switch (index) {
    case 4: return rastrigin(z) + kBias;
    case 5: return griewank(z) + kBias;
    case 6: return weierstrass(z) + kBias;
    case 7: return modified_schwefel(z) + kBias;
    case 8: return expanded_schaffer_f6(z) + kBias;
    case 9: return happy_cat(z) + kBias;
    case 10: return ackley(z) + kBias;
    default: break;
  }
  throw std::invalid_argument("unknown CEC function " + std::to_string(index));
}

}  // namespace catswarm
