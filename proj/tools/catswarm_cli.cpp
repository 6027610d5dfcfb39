// Command-line front end for running and reporting swarm experiments.
#include <cstdio>
#include <exception>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "catswarm/benchmarks.hpp"
#include "catswarm/experiment.hpp"

namespace {

using namespace catswarm;

void list_problems() {
  std::cout << "id,dimension,lower,upper,f_min,title\n";
  for (const BenchmarkId id : all_benchmarks()) {
    const BenchmarkMeta m = benchmark_metadata(id);
    std::cout << to_string(id) << ',' << m.dimension << ',' << format_real(m.lower) << ','
              << format_real(m.upper) << ',' << format_real(m.f_min) << ',' << m.title << '\n';
  }
  std::cout << "QAPLIB instances: pass the path of a .dat file (e.g. ste36a.dat)\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cat swarm optimization experiments (DCSO, CSO, DE)"};
  app.require_subcommand(1);

  std::string config_path;
  std::string output_dir;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> runs;
  std::optional<int> workers;
  bool quiet = false;

  CLI::App* run = app.add_subcommand("run", "Run the experiment described by a JSON config");
  run->add_option("--config", config_path, "Experiment config file")->required()->check(CLI::ExistingFile);
  run->add_option("--output-dir", output_dir, "Directory for CSV outputs (overrides the config)");
  run->add_option("--seed", seed, "Base seed (overrides the config)");
  run->add_option("--runs", runs, "Independent runs per problem and algorithm (overrides the config)");
  run->add_option("--workers", workers, "Runs executed concurrently; 0 uses all threads");
  run->add_flag("--quiet", quiet, "Suppress progress output");

  std::string reference = "DCSO";
  CLI::App* report = app.add_subcommand("report", "Rebuild summary tables from saved run artifacts");
  report->add_option("--output-dir", output_dir, "Directory holding runs.csv")->required();
  report->add_option("--reference", reference, "Algorithm compared against the others in pvalues.csv");
  report->add_flag("--quiet", quiet, "Suppress the summary printout");

  app.add_subcommand("list-problems", "List the built-in benchmark functions");

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand("list-problems")) {
      list_problems();
      return 0;
    }

    if (app.got_subcommand("run")) {
      ExperimentConfig cfg = load_experiment_config(config_path);
      if (!output_dir.empty()) cfg.output_dir = output_dir;
      if (seed) cfg.base_seed = *seed;
      if (runs) cfg.runs = *runs;
      if (workers) cfg.workers = *workers;

      ProgressFn progress;
      if (!quiet) {
        progress = [](const std::string& p, const std::string& a, std::size_t r, double best) {
          std::cerr << p << ' ' << a << " run " << r << " best " << format_real(best) << '\n';
        };
      }
      const ExperimentResults results = run_experiment(cfg, progress);
      emit_reports(results, cfg.output_dir, to_string(cfg.reference_algorithm));
      if (!quiet) {
        for (const SummaryRow& row : summarize(results))
          std::cout << row.problem << ' ' << row.algorithm << " mean " << format_real(row.mean) << " std "
                    << format_real(row.std) << '\n';
        std::cout << "outputs written to " << cfg.output_dir.string() << '\n';
      }
      return 0;
    }

    rebuild_reports(output_dir, reference);
    if (!quiet) std::cout << "reports rebuilt in " << output_dir << '\n';
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
