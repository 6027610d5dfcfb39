#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "catswarm/benchmarks.hpp"
#include "catswarm/params.hpp"

namespace catswarm {

enum class ProblemKind { Benchmark, Qap };

struct ProblemEntry {
  ProblemKind kind = ProblemKind::Benchmark;
  std::string name;  // "F1", "CEC04" or the QAPLIB file stem
  BenchmarkId benchmark;
  std::filesystem::path qaplib_path;
  std::filesystem::path shift_path;     // optional CEC shift vector
  std::filesystem::path rotation_path;  // optional CEC rotation matrix
};

struct AlgorithmEntry {
  Algorithm algorithm = Algorithm::Dcso;
  AlgorithmParams params = DcsoParams{};
};

struct ExperimentConfig {
  std::vector<ProblemEntry> problems;
  std::vector<AlgorithmEntry> algorithms;
  std::size_t runs = 30;
  std::size_t population_size = 30;
  std::size_t max_iter = 500;
  std::uint64_t base_seed = 0;
  std::filesystem::path output_dir = "results";
  // Runs executed concurrently (0 = all OpenMP threads).
  int workers = 1;
  // Threads inside one run; 1 keeps each run on the serial reference path.
  int threads = 1;
  // When set, run r of every algorithm on a problem shares one seed.
  bool paired_seeds = false;
  // When false, elapsed times are written as 0 so outputs are byte-stable.
  bool record_timing = true;
  // Unset means on for benchmark functions and off for QAP instances.
  std::optional<bool> record_diversity;
  double velocity_fraction = 1.0;
  // Algorithm compared against every other one in pvalues.csv.
  Algorithm reference_algorithm = Algorithm::Dcso;

  /// Throws std::invalid_argument naming the first problem found.
  void validate() const;
  bool diversity_for(const ProblemEntry& problem) const;
};

/// Parses the JSON config format documented in the README. Relative file
/// paths are resolved against `base_dir`.
ExperimentConfig parse_experiment_config(std::string_view json_text,
                                         const std::filesystem::path& base_dir = {});
ExperimentConfig load_experiment_config(const std::filesystem::path& path);

/// Problem entry for a name such as "F9", "cec04" or a path to a QAPLIB file.
ProblemEntry make_problem_entry(std::string_view spec, const std::filesystem::path& base_dir = {});

/// base_seed XOR a 64-bit hash of (problem, algorithm, run). With `paired`
/// the algorithm does not enter the hash.
std::uint64_t derive_seed(std::uint64_t base_seed, std::string_view problem, std::string_view algorithm,
                          std::size_t run, bool paired = false);

struct RunRecord {
  std::size_t run = 0;
  std::uint64_t seed = 0;
  double best_cost = 0.0;
  double elapsed_seconds = 0.0;
  std::vector<double> convergence;
  std::vector<double> diversity;
};

/// All runs of one experiment, indexed [problem][algorithm][run].
struct ExperimentResults {
  std::vector<std::string> problems;
  std::vector<std::string> algorithms;
  std::vector<std::vector<std::vector<RunRecord>>> runs;
};

using ProgressFn = std::function<void(const std::string& problem, const std::string& algorithm,
                                      std::size_t run, double best_cost)>;

/// Executes every (problem, algorithm, run) triple. A failing run aborts the
/// experiment with a std::runtime_error that names the triple.
ExperimentResults run_experiment(const ExperimentConfig& config, const ProgressFn& progress = {});

struct SummaryRow {
  std::string problem;
  std::string algorithm;
  double mean = 0.0;
  double std = 0.0;
  double mean_elapsed_seconds = 0.0;
};

std::vector<SummaryRow> summarize(const ExperimentResults& results);

/// Writes traces, runs.csv and the derived tables into `output_dir`.
void emit_reports(const ExperimentResults& results, const std::filesystem::path& output_dir,
                  std::string_view reference_algorithm = "DCSO");

/// Rebuilds results from runs.csv and the saved traces in `output_dir`.
ExperimentResults load_results(const std::filesystem::path& output_dir);

/// Regenerates summary.csv, pvalues.csv, ranks.csv and balance.csv from the
/// saved run artifacts. Running it twice leaves the files unchanged.
void rebuild_reports(const std::filesystem::path& output_dir, std::string_view reference_algorithm = "DCSO");

/// Shortest decimal text that parses back to the same double.
std::string format_real(double value);

}  // namespace catswarm
