#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

namespace catswarm {

/// Dynamic CSO. Defaults follow the published control settings
/// (SMP 5, CDC 0.8, c 2.05, inertia 0.9 -> 0.4).
struct DcsoParams {
  int smp = 5;
  double cdc = 0.8;
  double c1 = 2.05;
  double w_max = 0.9;
  double w_min = 0.4;
  // When set, the seeking cat's current position competes with its copies.
  bool elitist_seeking = false;
  // One uniform draw per dimension in the tracing update, or one per cat.
  bool rand_per_dimension = true;

  void validate() const;
};

/// Reference CSO (MR 0.2, SMP 5, SRD 0.2, CDC 0.8, SPC on, c 2.05).
struct CsoParams {
  double mr = 0.2;
  int smp = 5;
  double srd = 0.2;
  double cdc = 0.8;
  bool spc = true;
  double c1 = 2.05;

  void validate() const;
};

/// DE/rand/1/bin with the scale factor dithered in [beta_min, beta_max].
struct DeParams {
  double beta_min = 0.2;
  double beta_max = 0.8;
  double crossover_rate = 0.2;

  void validate() const;
};

enum class Algorithm { Dcso, Cso, De };

std::string_view to_string(Algorithm algorithm) noexcept;
/// Accepts "DCSO", "CSO", "DE" (case-insensitive). Throws std::invalid_argument.
Algorithm parse_algorithm(std::string_view name);

using AlgorithmParams = std::variant<DcsoParams, CsoParams, DeParams>;

AlgorithmParams default_params(Algorithm algorithm);

struct RunConfig {
  std::size_t population_size = 30;
  std::size_t max_iter = 500;
  Algorithm algorithm = Algorithm::Dcso;
  AlgorithmParams params = DcsoParams{};
  std::uint64_t seed = 0;
  bool record_diversity = true;
  // Velocity limit as a fraction of each dimension's width.
  double velocity_fraction = 1.0;
  // 1 runs the serial reference loop; 0 uses every OpenMP thread.
  int threads = 1;

  static RunConfig make(Algorithm algorithm, std::uint64_t seed);

  /// Throws std::invalid_argument on inconsistent settings.
  void validate() const;
};

}  // namespace catswarm
