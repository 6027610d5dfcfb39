#include "catswarm/params.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace catswarm {

namespace {

void require(bool condition, const char* message) {
  if (!condition) throw std::invalid_argument(message);
}

}  // namespace

void DcsoParams::validate() const {
  require(smp >= 1, "dcso: smp must be at least 1");
  require(cdc > 0.0 && cdc <= 1.0, "dcso: cdc must lie in (0, 1]");
  require(w_min <= w_max, "dcso: w_min must not exceed w_max");
}

void CsoParams::validate() const {
  require(mr >= 0.0 && mr <= 1.0, "cso: mr must lie in [0, 1]");
  require(smp >= 1, "cso: smp must be at least 1");
  require(!spc || smp >= 2, "cso: spc needs smp >= 2");
  require(srd > 0.0, "cso: srd must be positive");
  require(cdc > 0.0 && cdc <= 1.0, "cso: cdc must lie in (0, 1]");
}

void DeParams::validate() const {
  require(beta_min >= 0.0 && beta_min <= beta_max, "de: need 0 <= beta_min <= beta_max");
  require(crossover_rate >= 0.0 && crossover_rate <= 1.0, "de: crossover_rate must lie in [0, 1]");
}

std::string_view to_string(Algorithm algorithm) noexcept {
  switch (algorithm) {
    case Algorithm::Dcso: return "DCSO";
    case Algorithm::Cso: return "CSO";
    case Algorithm::De: return "DE";
  }
  return "?";
}

Algorithm parse_algorithm(std::string_view name) {
  std::string upper(name);
  std::transform(upper.begin(), upper.end(), upper.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  if (upper == "DCSO") return Algorithm::Dcso;
  if (upper == "CSO") return Algorithm::Cso;
  if (upper == "DE") return Algorithm::De;
  throw std::invalid_argument("unknown algorithm '" + std::string(name) + "'");
}

AlgorithmParams default_params(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::Dcso: return DcsoParams{};
    case Algorithm::Cso: return CsoParams{};
    case Algorithm::De: return DeParams{};
  }
  return DcsoParams{};
}

RunConfig RunConfig::make(Algorithm algorithm, std::uint64_t seed) {
  RunConfig config;
  config.algorithm = algorithm;
  config.params = default_params(algorithm);
  config.seed = seed;
  return config;
}

void RunConfig::validate() const {
  require(population_size >= 3, "run: population size must be at least 3");
  require(max_iter >= 1, "run: max_iter must be at least 1");
  require(velocity_fraction > 0.0, "run: velocity_fraction must be positive");
  require(threads >= 0, "run: threads must be non-negative");
  switch (algorithm) {
    case Algorithm::Dcso:
      require(std::holds_alternative<DcsoParams>(params), "run: DCSO needs DcsoParams");
      std::get<DcsoParams>(params).validate();
      break;
    case Algorithm::Cso:
      require(std::holds_alternative<CsoParams>(params), "run: CSO needs CsoParams");
      std::get<CsoParams>(params).validate();
      break;
    case Algorithm::De:
      require(std::holds_alternative<DeParams>(params), "run: DE needs DeParams");
      require(population_size >= 4, "run: DE needs a population of at least 4");
      std::get<DeParams>(params).validate();
      break;
  }
}

}  // namespace catswarm
