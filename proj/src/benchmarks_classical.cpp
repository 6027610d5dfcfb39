#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "catswarm/benchmarks.hpp"

namespace catswarm {

namespace {

constexpr double kPi = std::numbers::pi;

// Penalty term shared by F12 and F13.
double penalty(double x, double a, double k, double m) {
  if (x > a) return k * std::pow(x - a, m);
  if (x < -a) return k * std::pow(-x - a, m);
  return 0.0;
}

double sphere(std::span<const double> x) {
  double s = 0.0;
  for (double v : x) s += v * v;
  return s;
}

double schwefel_2_22(std::span<const double> x) {
  double s = 0.0;
  double p = 1.0;
  for (double v : x) {
    s += std::abs(v);
    p *= std::abs(v);
  }
  return s + p;
}

double schwefel_1_2(std::span<const double> x) {
  double total = 0.0;
  double prefix = 0.0;
  for (double v : x) {
    prefix += v;
    total += prefix * prefix;
  }
  return total;
}

double schwefel_2_21(std::span<const double> x) {
  double m = 0.0;
  for (double v : x) m = std::max(m, std::abs(v));
  return m;
}

double rosenbrock(std::span<const double> x) {
  double s = 0.0;
  for (std::size_t i = 0; i + 1 < x.size(); ++i) {
    const double a = x[i + 1] - x[i] * x[i];
    const double b = x[i] - 1.0;
    s += 100.0 * a * a + b * b;
  }
  return s;
}

// Continuous step variant: sum |x + 0.5|^2.
double step(std::span<const double> x) {
  double s = 0.0;
  for (double v : x) s += (v + 0.5) * (v + 0.5);
  return s;
}

double quartic_noise(std::span<const double> x, RngStream& noise) {
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double sq = x[i] * x[i];
    s += static_cast<double>(i + 1) * sq * sq;
  }
  return s + noise.next_uniform();
}

double schwefel_2_26(std::span<const double> x) {
  double s = 0.0;
  for (double v : x) s -= v * std::sin(std::sqrt(std::abs(v)));
  return s;
}

double rastrigin(std::span<const double> x) {
  double s = 0.0;
  for (double v : x) s += v * v - 10.0 * std::cos(2.0 * kPi * v) + 10.0;
  return s;
}

double ackley(std::span<const double> x) {
  const double n = static_cast<double>(x.size());
  double sq = 0.0;
  double cs = 0.0;
  for (double v : x) {
    sq += v * v;
    cs += std::cos(2.0 * kPi * v);
  }
  return -20.0 * std::exp(-0.2 * std::sqrt(sq / n)) - std::exp(cs / n) + 20.0 + std::numbers::e;
}

double griewank(std::span<const double> x) {
  double s = 0.0;
  double p = 1.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    s += x[i] * x[i];
    p *= std::cos(x[i] / std::sqrt(static_cast<double>(i + 1)));
  }
  return s / 4000.0 - p + 1.0;
}

double penalized_1(std::span<const double> x) {
  const std::size_t n = x.size();
  auto y = [&](std::size_t i) { return 1.0 + (x[i] + 1.0) / 4.0; };
  const double s1 = std::sin(kPi * y(0));
  double body = 10.0 * s1 * s1;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const double si = std::sin(kPi * y(i + 1));
    body += (y(i) - 1.0) * (y(i) - 1.0) * (1.0 + 10.0 * si * si);
  }
  body += (y(n - 1) - 1.0) * (y(n - 1) - 1.0);
  double pen = 0.0;
  for (double v : x) pen += penalty(v, 10.0, 100.0, 4.0);
  return kPi / static_cast<double>(n) * body + pen;
}

double penalized_2(std::span<const double> x) {
  const std::size_t n = x.size();
  const double s1 = std::sin(3.0 * kPi * x[0]);
  double body = s1 * s1;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const double si = std::sin(3.0 * kPi * x[i + 1]);
    body += (x[i] - 1.0) * (x[i] - 1.0) * (1.0 + si * si);
  }
  const double sn = std::sin(2.0 * kPi * x[n - 1]);
  body += (x[n - 1] - 1.0) * (x[n - 1] - 1.0) * (1.0 + sn * sn);
  double pen = 0.0;
  for (double v : x) pen += penalty(v, 10.0, 100.0, 4.0);
  return 0.1 * body + pen;
}

double foxholes(std::span<const double> x) {
  static constexpr std::array<double, 5> kGrid = {-32.0, -16.0, 0.0, 16.0, 32.0};
  double s = 1.0 / 500.0;
  for (int j = 0; j < 25; ++j) {
    const double a1 = kGrid[static_cast<std::size_t>(j % 5)];
    const double a2 = kGrid[static_cast<std::size_t>(j / 5)];
    s += 1.0 / (j + 1 + std::pow(x[0] - a1, 6) + std::pow(x[1] - a2, 6));
  }
  return 1.0 / s;
}

double kowalik(std::span<const double> x) {
  static constexpr std::array<double, 11> kA = {0.1957, 0.1947, 0.1735, 0.1600, 0.0844, 0.0627,
                                                0.0456, 0.0342, 0.0323, 0.0235, 0.0246};
  static constexpr std::array<double, 11> kInvB = {0.25, 0.5, 1.0, 2.0, 4.0, 6.0,
                                                   8.0, 10.0, 12.0, 14.0, 16.0};
  double s = 0.0;
  for (std::size_t i = 0; i < kA.size(); ++i) {
    const double b = 1.0 / kInvB[i];
    const double r = kA[i] - x[0] * (b * b + b * x[1]) / (b * b + b * x[2] + x[3]);
    s += r * r;
  }
  return s;
}

double six_hump_camel(std::span<const double> x) {
  const double a = x[0];
  const double b = x[1];
  return 4.0 * a * a - 2.1 * std::pow(a, 4) + std::pow(a, 6) / 3.0 + a * b - 4.0 * b * b +
         4.0 * std::pow(b, 4);
}

double branin(std::span<const double> x) {
  const double t = x[1] - 5.1 / (4.0 * kPi * kPi) * x[0] * x[0] + 5.0 / kPi * x[0] - 6.0;
  return t * t + 10.0 * (1.0 - 1.0 / (8.0 * kPi)) * std::cos(x[0]) + 10.0;
}

double goldstein_price(std::span<const double> x) {
  const double a = x[0];
  const double b = x[1];
  const double s = a + b + 1.0;
  const double t = 2.0 * a - 3.0 * b;
  return (1.0 + s * s * (19.0 - 14.0 * a + 3.0 * a * a - 14.0 * b + 6.0 * a * b + 3.0 * b * b)) *
         (30.0 + t * t * (18.0 - 32.0 * a + 12.0 * a * a + 48.0 * b - 36.0 * a * b + 27.0 * b * b));
}

template <std::size_t D>
double hartmann(std::span<const double> x, const std::array<std::array<double, D>, 4>& a,
                const std::array<std::array<double, D>, 4>& p) {
  static constexpr std::array<double, 4> kC = {1.0, 1.2, 3.0, 3.2};
  double s = 0.0;
  for (std::size_t i = 0; i < 4; ++i) {
    double inner = 0.0;
    for (std::size_t j = 0; j < D; ++j) inner += a[i][j] * (x[j] - p[i][j]) * (x[j] - p[i][j]);
    s -= kC[i] * std::exp(-inner);
  }
  return s;
}

double hartmann_3(std::span<const double> x) {
  static constexpr std::array<std::array<double, 3>, 4> kA = {{
      {3.0, 10.0, 30.0}, {0.1, 10.0, 35.0}, {3.0, 10.0, 30.0}, {0.1, 10.0, 35.0}}};
  static constexpr std::array<std::array<double, 3>, 4> kP = {{
      {0.3689, 0.1170, 0.2673},
      {0.4699, 0.4387, 0.7470},
      {0.1091, 0.8732, 0.5547},
      {0.03815, 0.5743, 0.8828}}};
  return hartmann<3>(x, kA, kP);
}

double hartmann_6(std::span<const double> x) {
  static constexpr std::array<std::array<double, 6>, 4> kA = {{
      {10.0, 3.0, 17.0, 3.5, 1.7, 8.0},
      {0.05, 10.0, 17.0, 0.1, 8.0, 14.0},
      {3.0, 3.5, 1.7, 10.0, 17.0, 8.0},
      {17.0, 8.0, 0.05, 10.0, 0.1, 14.0}}};
  static constexpr std::array<std::array<double, 6>, 4> kP = {{
      {0.1312, 0.1696, 0.5569, 0.0124, 0.8283, 0.5886},
      {0.2329, 0.4135, 0.8307, 0.3736, 0.1004, 0.9991},
      {0.2348, 0.1451, 0.3522, 0.2883, 0.3047, 0.6650},
      {0.4047, 0.8828, 0.8732, 0.5743, 0.1091, 0.0381}}};
  return hartmann<6>(x, kA, kP);
}

double shekel(std::span<const double> x, std::size_t terms) {
  static constexpr std::array<std::array<double, 4>, 10> kA = {{
      {4, 4, 4, 4}, {1, 1, 1, 1}, {8, 8, 8, 8}, {6, 6, 6, 6}, {3, 7, 3, 7},
      {2, 9, 2, 9}, {5, 5, 3, 3}, {8, 1, 8, 1}, {6, 2, 6, 2}, {7, 3.6, 7, 3.6}}};
  static constexpr std::array<double, 10> kC = {0.1, 0.2, 0.2, 0.4, 0.4, 0.6, 0.3, 0.7, 0.5, 0.5};
  double s = 0.0;
  for (std::size_t i = 0; i < terms; ++i) {
    double d = 0.0;
    for (std::size_t j = 0; j < 4; ++j) d += (x[j] - kA[i][j]) * (x[j] - kA[i][j]);
    s -= 1.0 / (d + kC[i]);
  }
  return s;
}

}  // namespace

double eval_classical(int index, std::span<const double> x, RngStream& noise) {
  const BenchmarkMeta meta = benchmark_metadata({BenchmarkFamily::Classical, index});
  if (x.size() != meta.dimension)
    throw std::invalid_argument("F" + std::to_string(index) + ": expected dimension " +
                                std::to_string(meta.dimension) + ", got " + std::to_string(x.size()));
  switch (index) {
    case 1: return sphere(x);
    case 2: return schwefel_2_22(x);
    case 3: return schwefel_1_2(x);
    case 4: return schwefel_2_21(x);
    case 5: return rosenbrock(x);
    case 6: return step(x);
    case 7: return quartic_noise(x, noise);
    case 8: return schwefel_2_26(x);
    case 9: return rastrigin(x);
    case 10: return ackley(x);
    case 11: return griewank(x);
    case 12: return penalized_1(x);
    case 13: return penalized_2(x);
    case 14: return foxholes(x);
    case 15: return kowalik(x);
    case 16: return six_hump_camel(x);
    case 17: return branin(x);
    case 18: return goldstein_price(x);
    case 19: return hartmann_3(x);
    case 20: return hartmann_6(x);
    case 21: return shekel(x, 5);
    case 22: return shekel(x, 7);
    case 23: return shekel(x, 10);
    default: break;
  }
  throw std::invalid_argument("unknown classical function F" + std::to_string(index));
}

}  // namespace catswarm
