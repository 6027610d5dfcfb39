#include "catswarm/qap.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <memory>
#include <numeric>
#include <sstream>

namespace catswarm {

namespace {

std::vector<std::string_view> tokenize(std::string_view text) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    const std::size_t start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i > start) tokens.push_back(text.substr(start, i - start));
  }
  return tokens;
}

double to_number(std::string_view token, std::size_t index) {
  double value = 0.0;
  const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || end != token.data() + token.size() || !std::isfinite(value))
    throw QaplibParseError("qaplib: token " + std::to_string(index) + " is not a number: '" +
                               std::string(token) + "'",
                           index);
  return value;
}

}  // namespace

QapInstance parse_qaplib(std::string_view text, std::string name) {
  const std::vector<std::string_view> tokens = tokenize(text);
  if (tokens.empty()) throw QaplibParseError("qaplib: empty input", 0);

  const double order = to_number(tokens[0], 0);
  if (order < 1.0 || order != std::floor(order))
    throw QaplibParseError("qaplib: instance size must be a positive integer", 0);

  QapInstance inst;
  inst.name = std::move(name);
  inst.n = static_cast<std::size_t>(order);
  const std::size_t cells = inst.n * inst.n;
  const std::size_t expected = 1 + 2 * cells;
  if (tokens.size() < expected)
    throw QaplibParseError("qaplib: expected " + std::to_string(expected) + " tokens, found " +
                               std::to_string(tokens.size()),
                           tokens.size());
  if (tokens.size() > expected)
    throw QaplibParseError("qaplib: unexpected extra token at position " + std::to_string(expected) +
                               " ('" + std::string(tokens[expected]) + "')",
                           expected);

  inst.flow.resize(cells);
  inst.dist.resize(cells);
  for (std::size_t c = 0; c < cells; ++c) inst.flow[c] = to_number(tokens[1 + c], 1 + c);
  for (std::size_t c = 0; c < cells; ++c) inst.dist[c] = to_number(tokens[1 + cells + c], 1 + cells + c);
  return inst;
}

QapInstance load_qaplib(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open QAPLIB file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_qaplib(buffer.str(), std::filesystem::path(path).stem().string());
}

bool is_permutation(const Permutation& p, std::size_t n) noexcept {
  if (p.size() != n) return false;
  std::vector<bool> seen(n, false);
  for (int v : p) {
    if (v < 1 || static_cast<std::size_t>(v) > n || seen[static_cast<std::size_t>(v - 1)]) return false;
    seen[static_cast<std::size_t>(v - 1)] = true;
  }
  return true;
}

double qap_cost(const QapInstance& instance, const Permutation& p) {
  if (!is_permutation(p, instance.n))
    throw std::invalid_argument("qap_cost: not a permutation of 1.." + std::to_string(instance.n));
  const std::size_t n = instance.n;
  double cost = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto pi = static_cast<std::size_t>(p[i] - 1);
    const double* flow_row = &instance.flow[i * n];
    const double* dist_row = &instance.dist[pi * n];
    for (std::size_t k = 0; k < n; ++k) cost += flow_row[k] * dist_row[static_cast<std::size_t>(p[k] - 1)];
  }
  return cost;
}

Permutation decode_random_keys(std::span<const double> position) {
  std::vector<std::size_t> order(position.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return position[a] < position[b]; });
  Permutation ranks(position.size());
  for (std::size_t r = 0; r < order.size(); ++r) ranks[order[r]] = static_cast<int>(r + 1);
  return ranks;
}

ObjectiveSpec qap_objective(const QapInstance& instance) {
  auto shared = std::make_shared<const QapInstance>(instance);
  return ObjectiveSpec{instance.name.empty() ? std::string("qap") : instance.name,
                       Bounds::uniform(instance.n, 0.0, 1.0),
                       [shared](std::span<const double> x, RngStream&) {
                         return qap_cost(*shared, decode_random_keys(x));
                       }};
}

}  // namespace catswarm
