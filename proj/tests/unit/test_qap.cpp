#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "catswarm/optimizer.hpp"
#include "catswarm/qap.hpp"
#include "oracles.hpp"

using namespace catswarm;

namespace {

const std::string kDataDir = CATSWARM_TEST_DATA_DIR;

// Flow sums to 12 and every off-diagonal distance is 1, so each assignment
// costs 12.
constexpr const char* kToy =
    "3\n\n"
    "0 1 2\n1 0 3\n2 3 0\n\n"
    "0 1 1\n1 0 1\n1 1 0\n";

QapInstance random_instance(std::size_t n, RngStream& rng, bool symmetric = false) {
  QapInstance q;
  q.n = n;
  q.flow.assign(n * n, 0.0);
  q.dist.assign(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      if (i == k) continue;
      if (symmetric && k < i) {
        q.flow[i * n + k] = q.flow[k * n + i];
        q.dist[i * n + k] = q.dist[k * n + i];
      } else {
        q.flow[i * n + k] = static_cast<double>(rng.next_below(10));
        q.dist[i * n + k] = static_cast<double>(rng.next_below(10));
      }
    }
  }
  return q;
}

Permutation random_permutation(std::size_t n, RngStream& rng) {
  Permutation p(n);
  std::iota(p.begin(), p.end(), 1);
  for (std::size_t i = n; i > 1; --i) std::swap(p[i - 1], p[rng.next_below(i)]);
  return p;
}

}  // namespace

TEST(QaplibParse, ReadsSizeAndMatricesInFileOrder) {
  const QapInstance q = parse_qaplib("2\n 1 2\n 3 4\n\n 5 6 7 8", "tiny");
  EXPECT_EQ(q.name, "tiny");
  EXPECT_EQ(q.n, 2u);
  EXPECT_EQ(q.flow, (std::vector<double>{1, 2, 3, 4}));
  EXPECT_EQ(q.dist, (std::vector<double>{5, 6, 7, 8}));
  EXPECT_EQ(q.flow_at(1, 0), 3.0);
  EXPECT_EQ(q.dist_at(0, 1), 6.0);
}

TEST(QaplibParse, ExtraTokenReportsItsIndex) {
  try {
    parse_qaplib("2 1 2 3 4 5 6 7 8 9");
    FAIL() << "expected QaplibParseError";
  } catch (const QaplibParseError& e) {
    EXPECT_EQ(e.token_index(), 9u);
  }
}

TEST(QaplibParse, MissingTokensReportTheEnd) {
  try {
    parse_qaplib("2 1 2 3 4 5 6");
    FAIL() << "expected QaplibParseError";
  } catch (const QaplibParseError& e) {
    EXPECT_EQ(e.token_index(), 7u);
  }
}

TEST(QaplibParse, NonNumericTokenReportsItsIndex) {
  try {
    parse_qaplib("2 1 2 x 4 5 6 7 8");
    FAIL() << "expected QaplibParseError";
  } catch (const QaplibParseError& e) {
    EXPECT_EQ(e.token_index(), 3u);
  }
  EXPECT_THROW(parse_qaplib(""), QaplibParseError);
  EXPECT_THROW(parse_qaplib("0"), QaplibParseError);
  EXPECT_THROW(parse_qaplib("1.5 1 2"), QaplibParseError);
}

TEST(QaplibLoad, UsesFileStemAsName) {
  const QapInstance q = load_qaplib(kDataDir + "/chr12c.dat");
  EXPECT_EQ(q.name, "chr12c");
  EXPECT_EQ(q.n, 12u);
  EXPECT_THROW(load_qaplib(kDataDir + "/does_not_exist.dat"), std::runtime_error);
}

TEST(QapCost, ToyInstanceIsConstant) {
  const QapInstance q = parse_qaplib(kToy);
  Permutation p = {1, 2, 3};
  do {
    EXPECT_EQ(qap_cost(q, p), 12.0);
  } while (std::next_permutation(p.begin(), p.end()));
}

TEST(QapCost, ZeroFlowCostsNothing) {
  QapInstance q = parse_qaplib(kToy);
  std::fill(q.flow.begin(), q.flow.end(), 0.0);
  EXPECT_EQ(qap_cost(q, {3, 1, 2}), 0.0);
}

TEST(QapCost, Chr12cPublishedSolution) {
  const QapInstance q = load_qaplib(kDataDir + "/chr12c.dat");
  const Permutation solution = {7, 5, 1, 3, 10, 4, 8, 6, 9, 11, 2, 12};
  EXPECT_EQ(qap_cost(q, solution), 11156.0);
  // The inverse permutation reads the assignment the other way round and is
  // far from optimal, which pins down the orientation convention.
  Permutation inverse(12);
  for (std::size_t i = 0; i < 12; ++i) inverse[static_cast<std::size_t>(solution[i] - 1)] = static_cast<int>(i + 1);
  EXPECT_EQ(qap_cost(q, inverse), 37812.0);
}

TEST(QapCost, RejectsNonPermutations) {
  const QapInstance q = parse_qaplib(kToy);
  EXPECT_THROW(qap_cost(q, {1, 1, 2}), std::invalid_argument);
  EXPECT_THROW(qap_cost(q, {1, 2}), std::invalid_argument);
  EXPECT_THROW(qap_cost(q, {0, 1, 2}), std::invalid_argument);
  EXPECT_TRUE(is_permutation({2, 3, 1}, 3));
  EXPECT_FALSE(is_permutation({2, 4, 1}, 3));
}

TEST(QapCost, AgreesWithFourIndexOracle) {
  RngStream rng(21);
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = 2 + rng.next_below(6);
    const QapInstance q = random_instance(n, rng);
    const Permutation p = random_permutation(n, rng);
    ASSERT_EQ(qap_cost(q, p), oracle::qap_cost_four_index(n, q.flow, q.dist, p));
  }
}

TEST(QapCost, BruteForceOptimumIsALowerBound) {
  RngStream rng(22);
  for (std::size_t n = 2; n <= 7; ++n) {
    const QapInstance q = random_instance(n, rng);
    const double best = oracle::qap_brute_force_optimum(n, q.flow, q.dist);
    for (int t = 0; t < 50; ++t) ASSERT_GE(qap_cost(q, random_permutation(n, rng)), best);
  }
}

TEST(QapCost, RelabellingFacilitiesAndLocations) {
  // Renaming facilities by sigma and locations by tau leaves the cost of the
  // correspondingly renamed assignment unchanged.
  RngStream rng(23);
  const std::size_t n = 6;
  const QapInstance q = random_instance(n, rng);
  const Permutation sigma = random_permutation(n, rng);
  const Permutation tau = random_permutation(n, rng);
  QapInstance r = q;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const auto si = static_cast<std::size_t>(sigma[i] - 1);
      const auto sk = static_cast<std::size_t>(sigma[k] - 1);
      const auto ti = static_cast<std::size_t>(tau[i] - 1);
      const auto tk = static_cast<std::size_t>(tau[k] - 1);
      r.flow[si * n + sk] = q.flow[i * n + k];
      r.dist[ti * n + tk] = q.dist[i * n + k];
    }
  const Permutation p = random_permutation(n, rng);
  Permutation renamed(n);
  for (std::size_t i = 0; i < n; ++i)
    renamed[static_cast<std::size_t>(sigma[i] - 1)] = tau[static_cast<std::size_t>(p[i] - 1)];
  EXPECT_EQ(qap_cost(q, p), qap_cost(r, renamed));
}

TEST(QapCost, SymmetricInstanceIsTwiceTheUpperTriangle) {
  RngStream rng(24);
  const std::size_t n = 7;
  const QapInstance q = random_instance(n, rng, true);
  const Permutation p = random_permutation(n, rng);
  double upper = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = i + 1; k < n; ++k)
      upper += q.flow_at(i, k) * q.dist_at(static_cast<std::size_t>(p[i] - 1), static_cast<std::size_t>(p[k] - 1));
  EXPECT_EQ(qap_cost(q, p), 2.0 * upper);
}

TEST(RandomKeys, WorkedExamples) {
  EXPECT_EQ(decode_random_keys(std::vector<double>{0.7, 0.1, 0.4}), (Permutation{3, 1, 2}));
  EXPECT_EQ(decode_random_keys(std::vector<double>{0.5, 0.5, 0.1}), (Permutation{2, 3, 1}));
  EXPECT_EQ(decode_random_keys(std::vector<double>{0.9}), (Permutation{1}));
}

TEST(RandomKeys, AlwaysAPermutation) {
  RngStream rng(25);
  for (int t = 0; t < 200; ++t) {
    std::vector<double> x(1 + rng.next_below(40));
    for (double& v : x) v = rng.next_below(4) * 0.25;  // plenty of ties
    ASSERT_TRUE(is_permutation(decode_random_keys(x), x.size()));
  }
}

TEST(RandomKeys, EquivariantUnderReordering) {
  RngStream rng(26);
  const std::size_t n = 15;
  std::vector<double> x(n);
  for (double& v : x) v = rng.next_uniform();
  const Permutation p = decode_random_keys(x);
  const Permutation sigma = random_permutation(n, rng);
  std::vector<double> shuffled(n);
  for (std::size_t i = 0; i < n; ++i) shuffled[i] = x[static_cast<std::size_t>(sigma[i] - 1)];
  const Permutation q = decode_random_keys(shuffled);
  for (std::size_t i = 0; i < n; ++i) ASSERT_EQ(q[i], p[static_cast<std::size_t>(sigma[i] - 1)]);
  // Any strictly increasing map of the keys gives the same decoding.
  std::vector<double> mapped = x;
  for (double& v : mapped) v = 3.0 * v * v * v + 1.0;
  EXPECT_EQ(decode_random_keys(mapped), p);
}

TEST(QapObjective, BoxAndValues) {
  const QapInstance q = parse_qaplib(kToy, "toy");
  const ObjectiveSpec spec = qap_objective(q);
  EXPECT_EQ(spec.dimension(), 3u);
  EXPECT_EQ(spec.bounds.lower(0), 0.0);
  EXPECT_EQ(spec.bounds.upper(2), 1.0);
  RngStream rng(27);
  for (int t = 0; t < 20; ++t) {
    const std::vector<double> x = {rng.next_uniform(), rng.next_uniform(), rng.next_uniform()};
    EXPECT_EQ(spec(x, rng), 12.0);
  }
}

TEST(QapObjective, OptimizersNeverBeatBruteForce) {
  RngStream rng(28);
  QapInstance q = random_instance(6, rng);
  const double best = oracle::qap_brute_force_optimum(6, q.flow, q.dist);
  const ObjectiveSpec spec = qap_objective(q);
  for (Algorithm a : {Algorithm::Dcso, Algorithm::Cso, Algorithm::De}) {
    RunConfig cfg = RunConfig::make(a, 5);
    cfg.population_size = 10;
    cfg.max_iter = 60;
    cfg.record_diversity = false;
    const RunResult r = run_optimizer(spec, cfg);
    EXPECT_GE(r.best_cost, best);
    EXPECT_EQ(r.best_cost, qap_cost(q, decode_random_keys(r.best_position)));
  }
}
