#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "catswarm/core.hpp"

namespace catswarm {

/// A QAPLIB instance. Matrices are stored row-major in file order: `flow` is
/// the first matrix of the file and `dist` the second.
struct QapInstance {
  std::string name;
  std::size_t n = 0;
  std::vector<double> flow;
  std::vector<double> dist;

  double flow_at(std::size_t i, std::size_t k) const { return flow[i * n + k]; }
  double dist_at(std::size_t j, std::size_t l) const { return dist[j * n + l]; }
};

/// 1-based assignment: element i goes to location perm[i - 1].
using Permutation = std::vector<int>;

/// Raised for malformed QAPLIB text. `token_index` is the 0-based index of
/// the offending token (or the token count when input ends early).
class QaplibParseError : public std::runtime_error {
 public:
  QaplibParseError(const std::string& what, std::size_t token_index)
      : std::runtime_error(what), token_index_(token_index) {}
  std::size_t token_index() const noexcept { return token_index_; }

 private:
  std::size_t token_index_;
};

QapInstance parse_qaplib(std::string_view text, std::string name = {});
QapInstance load_qaplib(const std::string& path);

/// True when `p` holds each of 1..n exactly once.
bool is_permutation(const Permutation& p, std::size_t n) noexcept;

/// sum_i sum_k flow[i][k] * dist[p(i)][p(k)].
double qap_cost(const QapInstance& instance, const Permutation& p);

/// Ascending rank of every component (1-based); equal values are ranked by
/// index.
Permutation decode_random_keys(std::span<const double> position);

/// Random-key objective on [0, 1]^n.
ObjectiveSpec qap_objective(const QapInstance& instance);

}  // namespace catswarm
