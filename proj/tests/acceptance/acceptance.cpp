// Acceptance suite. Each criterion prints exactly one line of the form
//   PASS criterion N: <detail>
// (or FAIL / SKIP). Exit status: 0 all passed, 1 any failure, 77 when every
// selected criterion that did not pass was skipped for missing data.

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "catswarm/benchmarks.hpp"
#include "catswarm/dcso.hpp"
#include "catswarm/diversity.hpp"
#include "catswarm/experiment.hpp"
#include "catswarm/optimizer.hpp"
#include "catswarm/qap.hpp"
#include "catswarm/statistics.hpp"
#include "oracles.hpp"

using namespace catswarm;
namespace fs = std::filesystem;

namespace {

enum class Verdict { Pass, Fail, Skip };

struct Outcome {
  Verdict verdict;
  std::string detail;
};

Outcome pass(std::string d) { return {Verdict::Pass, std::move(d)}; }
Outcome fail(std::string d) { return {Verdict::Fail, std::move(d)}; }
Outcome skip(std::string d) { return {Verdict::Skip, std::move(d)}; }

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// QAPLIB instances that are not shipped with the repository are looked up in
// $CATSWARM_QAPLIB_DIR first, then in data/qaplib.
std::optional<fs::path> find_qaplib(const std::string& stem) {
  std::vector<fs::path> dirs;
  if (const char* env = std::getenv("CATSWARM_QAPLIB_DIR")) dirs.emplace_back(env);
  dirs.emplace_back("data/qaplib");
  for (const auto& d : dirs) {
    const fs::path p = d / (stem + ".dat");
    if (fs::exists(p)) return p;
  }
  return std::nullopt;
}

double run_mean(const std::vector<RunRecord>& runs) {
  double s = 0.0;
  for (const auto& r : runs) s += r.best_cost;
  return s / static_cast<double>(runs.size());
}

Outcome criterion_1() {
  const auto path = find_qaplib("ste36b");
  if (!path) return skip("ste36b.dat not found (set CATSWARM_QAPLIB_DIR or copy it to data/qaplib)");
  const auto t0 = std::chrono::steady_clock::now();
  const QapInstance q = load_qaplib(path->string());
  const Permutation layout = {35, 31, 30, 29, 28, 1,  15, 9,  16, 33, 34, 32, 19, 20, 7,  10, 18, 17,
                              26, 25, 23, 14, 12, 13, 4,  8,  2,  24, 22, 21, 27, 11, 6,  5,  3,  36};
  const double cost = qap_cost(q, layout);
  const double elapsed = seconds_since(t0);
  const std::string detail = "ste36b layout cost " + num(cost) + " (expected 15852), " + num(elapsed) + " s";
  return cost == 15852.0 && elapsed < 1.0 ? pass(detail) : fail(detail);
}

Outcome criterion_2() {
  const Permutation p = decode_random_keys(std::vector<double>{0.12, 0.74, 0.01, 0.46});
  std::string got;
  for (int v : p) got += (got.empty() ? "" : " ") + std::to_string(v);
  const std::string detail = "decode(0.12 0.74 0.01 0.46) = (" + got + ")";
  return p == Permutation{2, 4, 1, 3} ? pass(detail) : fail(detail);
}

Outcome criterion_3() {
  const auto t0 = std::chrono::steady_clock::now();
  RngStream noise(0);
  const std::map<int, double> minimizer = {{1, 0.0},  {2, 0.0},  {3, 0.0},  {4, 0.0},   {5, 1.0},
                                           {6, -0.5}, {9, 0.0},  {10, 0.0}, {11, 0.0},  {12, -1.0},
                                           {13, 1.0}};
  double worst = 0.0;
  std::string worst_name = "none";
  for (const auto& [index, x0] : minimizer) {
    const BenchmarkId id{BenchmarkFamily::Classical, index};
    const auto meta = benchmark_metadata(id);
    const std::vector<double> x(meta.dimension, x0);
    const double err = std::abs(make_benchmark_objective(id)(x, noise) - meta.f_min);
    if (err > worst) {
      worst = err;
      worst_name = to_string(id);
    }
  }
  for (int index = 4; index <= 10; ++index) {
    const BenchmarkId id{BenchmarkFamily::Cec2019, index};
    const std::vector<double> x(benchmark_metadata(id).dimension, 0.0);
    const double err = std::abs(make_benchmark_objective(id)(x, noise) - 1.0);
    if (err > worst) {
      worst = err;
      worst_name = to_string(id);
    }
  }
  const double elapsed = seconds_since(t0);
  const std::string detail =
      "18 optima checked, worst |error| " + num(worst) + " at " + worst_name + ", " + num(elapsed) + " s";
  return worst <= 1e-9 && elapsed < 1.0 ? pass(detail) : fail(detail);
}

Outcome criterion_4() {
  const auto t0 = std::chrono::steady_clock::now();
  const std::size_t max_iter = 500;
  std::size_t checked = 0;
  for (std::size_t n : {3u, 10u, 30u}) {
    for (std::size_t i = 1; i <= max_iter; ++i) {
      const ModeCounts got = compute_mode_counts(i, n, max_iter);
      const auto [t, s] = oracle::mode_counts(i, n, max_iter);
      if (got.tracing != t || got.seeking != s)
        return fail("mismatch at N=" + std::to_string(n) + " i=" + std::to_string(i));
      ++checked;
    }
    if (compute_mode_counts(1, n, max_iter).tracing != 2) return fail("early clamp missing for N=" + std::to_string(n));
    if (compute_mode_counts(max_iter, n, max_iter).tracing != n)
      return fail("TCN != N at the last iteration for N=" + std::to_string(n));
  }
  const double elapsed = seconds_since(t0);
  const std::string detail = std::to_string(checked) + " (i, N) pairs match the oracle, " + num(elapsed) + " s";
  return elapsed < 1.0 ? pass(detail) : fail(detail);
}

ExperimentConfig desk_config(std::vector<std::string> problems, std::vector<Algorithm> algorithms, std::size_t runs) {
  ExperimentConfig cfg;
  for (const auto& p : problems) cfg.problems.push_back(make_problem_entry(p));
  for (Algorithm a : algorithms) cfg.algorithms.push_back({a, default_params(a)});
  cfg.runs = runs;
  cfg.population_size = 30;
  cfg.max_iter = 500;
  cfg.base_seed = 2024;
  cfg.workers = 0;
  cfg.record_timing = false;
  return cfg;
}

Outcome criterion_5() {
  const auto t0 = std::chrono::steady_clock::now();
  ExperimentConfig cfg = desk_config({"F1", "F9", "F10"}, {Algorithm::Dcso}, 10);
  cfg.record_diversity = false;
  const ExperimentResults res = run_experiment(cfg);
  const double f1 = run_mean(res.runs[0][0]);
  const double f9 = run_mean(res.runs[1][0]);
  const double f10 = run_mean(res.runs[2][0]);
  const double elapsed = seconds_since(t0);
  const std::string detail = "DCSO means over 10 runs: F1 " + num(f1) + " (<= 1e-20), F9 " + num(f9) +
                             " (<= 1e-8), F10 " + num(f10) + " (<= 1e-12), " + num(elapsed) + " s";
  return f1 <= 1e-20 && f9 <= 1e-8 && f10 <= 1e-12 ? pass(detail) : fail(detail);
}

Outcome criterion_6() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto ste36a = find_qaplib("ste36a");
  std::vector<std::string> problems = {"F1", "F3"};
  if (ste36a) problems.push_back(ste36a->string());
  ExperimentConfig cfg = desk_config(problems, {Algorithm::Dcso, Algorithm::Cso}, 10);
  cfg.paired_seeds = true;
  cfg.record_diversity = false;
  const ExperimentResults res = run_experiment(cfg);
  bool ok = true;
  std::string detail;
  for (std::size_t p = 0; p < res.problems.size(); ++p) {
    const double dcso = run_mean(res.runs[p][0]);
    const double cso = run_mean(res.runs[p][1]);
    ok = ok && dcso < cso;
    detail += res.problems[p] + " DCSO " + num(dcso) + " vs CSO " + num(cso) + "; ";
  }
  detail += num(seconds_since(t0)) + " s";
  if (!ok) return fail(detail);
  if (!ste36a) return skip(detail + "; ste36a.dat not found, QAP part not evaluated");
  return pass(detail);
}

// Printed means of the classical and CEC tables, columns DCSO, ChOA, CSO, DE.
const std::vector<std::vector<double>> kPrintedMeans = {
    {0, 2.20E-18, 7.72E-09, 2.35E-19},
    {9.64E-261, 1.56E-12, 1.14E-05, 5.61E-12},
    {0, 8.17E-07, 0.000283, 3.52E+01},
    {5.93E-233, 4.93E-06, 0.165671, 3.35E-03},
    {5.873546, 8.930067, 28.25196, 8.033931},
    {5.42E-06, 0.218349, 1.335225, 2.05E-19},
    {9.04E-05, 0.000813, 0.032696, 0.006223},
    {-3.21E+03, -2212.45, -2730.32, -4.19E+03},
    {0, 3.657066, 31.09397, 2.13E-10},
    {8.88E-16, 1.93E+01, 3.711059, 1.87E-10},
    {0, 0.070081, 0.498361, 0.001331},
    {2.60E-03, 0.037791, 2.579259, 1.40E-20},
    {0.082788, 0.935028, 1.513306, 4.30E-20},
    {1.852603, 1.324236, 1.031145, 1.392995},
    {3.08E-04, 0.001316, 0.002151, 0.001538},
    {-1.03163, -1.03162, -1.0316, -1.03163},
    {0.304251, 0.304253, 0.30435, 0.305665},
    {3.000027, 3.000177, 3.013953, 3},
    {-3.86173, -3.8546, -3.86104, -3.86278},
    {-3.28481, -2.56611, -3.24127, -3.32199},
    {-5.0552, -3.47675, -7.98884, -9.71627},
    {-5.61919, -3.84991, -9.84256, -10.3887},
    {-5.489, -4.24164, -9.11802, -10.3576},
    {4.09E+04, 4.24E+09, 3.57E+09, 1.91E+10},
    {18.34314, 18.40831, 19.6833, 18.34286},
    {13.7024, 13.70242, 13.70249, 13.70241},
    {55.97322, 5932.62, 244.6425, 21.26087},
    {2.308637, 4.209471, 2.683806, 2.175169},
    {6.611216, 12.15444, 11.66816, 9.244935},
    {207.6113, 1007.134, 462.3794, 249.976},
    {4.591039, 6.784621, 5.967812, 5.307605},
    {5.089876, 449.2725, 11.81882, 3.490228},
    {20.48603, 21.49854, 21.43583, 21.09283},
};

// Printed ranking table, same row and column order.
const std::vector<std::vector<double>> kPrintedRanks = {
    {1, 2, 4, 3}, {1, 2, 4, 3}, {1, 2, 3, 4}, {1, 2, 4, 3}, {1, 3, 4, 2}, {2, 3, 4, 1},   {1, 2, 4, 3},
    {3, 1, 2, 4}, {1, 3, 4, 2}, {1, 4, 3, 2}, {1, 3, 4, 2}, {2, 3, 4, 1}, {2, 3, 4, 1},   {4, 2, 1, 3},
    {1, 2, 4, 3}, {1.5, 3, 4, 1.5},           {4, 3, 2, 1}, {2, 3, 4, 1}, {2, 4, 1, 3},   {2, 4, 3, 1},
    {3, 4, 2, 1}, {3, 4, 2, 1}, {3, 4, 2, 1}, {1, 3, 2, 4}, {2, 3, 4, 1}, {1, 3, 4, 2},   {2, 4, 3, 1},
    {2, 4, 3, 1}, {1, 4, 3, 2}, {1, 4, 3, 2}, {1, 4, 3, 2}, {2, 4, 3, 1}, {1, 4, 3, 2},
};

// Reference optima as listed in the function tables.
const std::vector<double> kPrintedOptima = {0, 0, 0, 0, 0, 0, 0, -2094.9145, 0, 0, 0,       0,       0,       1,
                                            0.00030, -1.398, 0.398, 3, -3.86, -3.32, -10.1532, -10.4028,
                                            -10.5363, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1};

Outcome criterion_7() {
  const FriedmanRanks r = friedman_ranks(kPrintedMeans, std::span<const double>(kPrintedOptima));
  const auto ids = all_benchmarks();
  std::vector<std::string> mismatches;
  for (std::size_t f = 0; f < kPrintedRanks.size(); ++f) {
    if (r.per_function[f] != kPrintedRanks[f]) {
      std::string row = to_string(ids[f]) + " got (";
      for (std::size_t a = 0; a < 4; ++a) row += (a ? " " : "") + num(r.per_function[f][a]);
      mismatches.push_back(row + ")");
    }
  }
  const double dcso_avg = r.average[0];
  const bool avg_ok = std::abs(dcso_avg - 1.742424) <= 1e-6;
  std::string detail = std::to_string(kPrintedRanks.size() - mismatches.size()) + "/33 rows match, DCSO average " +
                       num(dcso_avg) + " (expected 1.742424)";
  for (const auto& m : mismatches) detail += "; mismatch " + m;
  return mismatches.empty() && avg_ok ? pass(detail) : fail(detail);
}

Outcome criterion_8() {
  RngStream rng(8);
  double worst = 0.0;
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 1 + rng.next_below(9);
    const std::size_t m = 1 + rng.next_below(10 - n);
    std::vector<double> a(n);
    std::vector<double> b(m);
    // Few distinct levels so ties appear often.
    for (double& v : a) v = static_cast<double>(rng.next_below(6));
    for (double& v : b) v = static_cast<double>(rng.next_below(6));
    worst = std::max(worst, std::abs(wilcoxon_rank_sum(a, b) - oracle::exact_rank_sum_p(a, b)));
  }
  std::vector<double> low(30);
  std::vector<double> high(30);
  for (std::size_t i = 0; i < 30; ++i) {
    low[i] = static_cast<double>(i);
    high[i] = 100.0 + static_cast<double>(i);
  }
  const double p = wilcoxon_rank_sum(low, high);
  const bool separated_ok = std::abs(p / 3.0e-11 - 1.0) <= 0.10;
  const std::string detail = "200 instances with n+m <= 10, worst |p - exact| " + num(worst) +
                             "; separated 30 vs 30 p = " + num(p) + " (3.0e-11 +/- 10%)";
  return worst <= 0.02 && separated_ok ? pass(detail) : fail(detail);
}

double mean_xpl(Algorithm algorithm, std::size_t runs) {
  const auto spec = make_benchmark_objective({BenchmarkFamily::Classical, 1});
  double total = 0.0;
  for (std::size_t r = 0; r < runs; ++r) {
    RunConfig cfg = RunConfig::make(algorithm, derive_seed(2024, "F1", to_string(algorithm), r));
    cfg.threads = 0;
    total += phase_balance(run_optimizer(spec, cfg).diversity_trace).xpl_percent;
  }
  return total / static_cast<double>(runs);
}

Outcome criterion_9() {
  const auto t0 = std::chrono::steady_clock::now();
  const std::vector<std::vector<double>> collapsed(30, std::vector<double>(30, 7.25));
  const double collapsed_div = dimension_diversity(collapsed).div;

  double worst_sum = 0.0;
  const auto spec = make_benchmark_objective({BenchmarkFamily::Classical, 1});
  for (Algorithm a : {Algorithm::Dcso, Algorithm::Cso}) {
    RunConfig cfg = RunConfig::make(a, 1);
    const RunResult r = run_optimizer(spec, cfg);
    for (const PhaseBalance& p : phase_series(r.diversity_trace))
      worst_sum = std::max(worst_sum, std::abs(p.xpl_percent + p.xpt_percent - 100.0));
  }
  const double dcso = mean_xpl(Algorithm::Dcso, 10);
  const double cso = mean_xpl(Algorithm::Cso, 10);
  const bool ok = collapsed_div == 0.0 && worst_sum <= 1e-9 && dcso >= 35.0 && dcso <= 65.0 && cso >= 60.0 &&
                  cso <= 90.0;
  const std::string detail = "collapsed Div " + num(collapsed_div) + ", worst |XPL+XPT-100| " + num(worst_sum) +
                             ", F1 mean XPL over 10 runs: DCSO " + num(dcso) + "% (band 35-65), CSO " + num(cso) +
                             "% (band 60-90), " + num(seconds_since(t0)) + " s";
  return ok ? pass(detail) : fail(detail);
}

std::map<std::string, std::string> tree_contents(const fs::path& root) {
  std::map<std::string, std::string> out;
  for (const auto& entry : fs::recursive_directory_iterator(root)) {
    if (!entry.is_regular_file()) continue;
    std::ifstream in(entry.path(), std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    out[fs::relative(entry.path(), root).generic_string()] = s.str();
  }
  return out;
}

Outcome criterion_10() {
  std::vector<std::string> problems = {"F1", "F7", "F15", "CEC05"};
  if (fs::exists("tests/data/chr12c.dat")) problems.emplace_back("tests/data/chr12c.dat");
  ExperimentConfig cfg = desk_config(problems, {Algorithm::Dcso, Algorithm::Cso, Algorithm::De}, 3);
  cfg.max_iter = 100;
  const fs::path base = fs::temp_directory_path() / "catswarm_acceptance_c10";
  fs::remove_all(base);
  std::size_t traces = 0;
  std::size_t increases = 0;
  for (const char* sub : {"first", "second"}) {
    const ExperimentResults res = run_experiment(cfg);
    emit_reports(res, base / sub);
    for (const auto& per_problem : res.runs)
      for (const auto& per_alg : per_problem)
        for (const RunRecord& r : per_alg) {
          ++traces;
          for (std::size_t i = 1; i < r.convergence.size(); ++i) increases += r.convergence[i] > r.convergence[i - 1];
        }
  }
  const auto a = tree_contents(base / "first");
  const auto b = tree_contents(base / "second");
  fs::remove_all(base);
  const bool identical = a == b && !a.empty();
  const std::string detail = std::to_string(a.size()) + " output files " +
                             (identical ? "byte-identical" : "DIFFER") + " across two invocations; " +
                             std::to_string(traces) + " traces with " + std::to_string(increases) + " increases";
  return identical && increases == 0 ? pass(detail) : fail(detail);
}

const std::vector<std::function<Outcome()>> kCriteria = {criterion_1, criterion_2, criterion_3, criterion_4,
                                                         criterion_5, criterion_6, criterion_7, criterion_8,
                                                         criterion_9, criterion_10};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"catswarm acceptance suite"};
  int only = 0;
  app.add_option("--criterion", only, "Run a single criterion (1-10); default runs all")
      ->check(CLI::Range(1, static_cast<int>(kCriteria.size())));
  CLI11_PARSE(app, argc, argv);

  int failed = 0;
  int skipped = 0;
  for (int c = 1; c <= static_cast<int>(kCriteria.size()); ++c) {
    if (only != 0 && c != only) continue;
    Outcome o;
    try {
      o = kCriteria[static_cast<std::size_t>(c - 1)]();
    } catch (const std::exception& e) {
      o = fail(std::string("exception: ") + e.what());
    }
    const char* tag = o.verdict == Verdict::Pass ? "PASS" : o.verdict == Verdict::Fail ? "FAIL" : "SKIP";
    std::printf("%s criterion %d: %s\n", tag, c, o.detail.c_str());
    std::fflush(stdout);
    failed += o.verdict == Verdict::Fail;
    skipped += o.verdict == Verdict::Skip;
  }
  if (failed > 0) return 1;
  return skipped > 0 ? 77 : 0;
}
