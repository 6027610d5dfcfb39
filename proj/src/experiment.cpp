#include "catswarm/experiment.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <fstream>
#include <limits>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>

#include "catswarm/diversity.hpp"
#include "catswarm/optimizer.hpp"
#include "catswarm/parallel.hpp"
#include "catswarm/qap.hpp"
#include "catswarm/statistics.hpp"
#include "json.hpp"

namespace catswarm {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

fs::path resolve(const fs::path& base_dir, const std::string& text) {
  fs::path p(text);
  if (p.is_relative() && !base_dir.empty()) p = base_dir / p;
  return p;
}

template <class T>
void read_field(const json& obj, const char* key, T& out) {
  if (obj.contains(key)) out = obj.at(key).get<T>();
}

void reject_unknown_keys(const json& obj, std::initializer_list<std::string_view> known, const std::string& where) {
  for (const auto& item : obj.items()) {
    if (std::find(known.begin(), known.end(), item.key()) == known.end())
      throw std::invalid_argument(where + ": unknown key '" + item.key() + "'");
  }
}

AlgorithmEntry parse_algorithm_entry(const json& node) {
  AlgorithmEntry entry;
  if (node.is_string()) {
    entry.algorithm = parse_algorithm(node.get<std::string>());
    entry.params = default_params(entry.algorithm);
    return entry;
  }
  if (!node.is_object() || !node.contains("name"))
    throw std::invalid_argument("algorithm entries must be a name or an object with \"name\"");
  entry.algorithm = parse_algorithm(node.at("name").get<std::string>());
  const std::string where = "algorithm " + std::string(to_string(entry.algorithm));
  switch (entry.algorithm) {
    case Algorithm::Dcso: {
      reject_unknown_keys(node, {"name", "smp", "cdc", "c1", "w_max", "w_min", "elitist_seeking", "rand_per_dimension"},
                          where);
      DcsoParams p;
      read_field(node, "smp", p.smp);
      read_field(node, "cdc", p.cdc);
      read_field(node, "c1", p.c1);
      read_field(node, "w_max", p.w_max);
      read_field(node, "w_min", p.w_min);
      read_field(node, "elitist_seeking", p.elitist_seeking);
      read_field(node, "rand_per_dimension", p.rand_per_dimension);
      entry.params = p;
      break;
    }
    case Algorithm::Cso: {
      reject_unknown_keys(node, {"name", "mr", "smp", "srd", "cdc", "spc", "c1"}, where);
      CsoParams p;
      read_field(node, "mr", p.mr);
      read_field(node, "smp", p.smp);
      read_field(node, "srd", p.srd);
      read_field(node, "cdc", p.cdc);
      read_field(node, "spc", p.spc);
      read_field(node, "c1", p.c1);
      entry.params = p;
      break;
    }
    case Algorithm::De: {
      reject_unknown_keys(node, {"name", "beta_min", "beta_max", "crossover_rate"}, where);
      DeParams p;
      read_field(node, "beta_min", p.beta_min);
      read_field(node, "beta_max", p.beta_max);
      read_field(node, "crossover_rate", p.crossover_rate);
      entry.params = p;
      break;
    }
  }
  std::visit([](const auto& p) { p.validate(); }, entry.params);
  return entry;
}

ProblemEntry parse_problem_entry(const json& node, const fs::path& base_dir) {
  if (node.is_string()) return make_problem_entry(node.get<std::string>(), base_dir);
  if (!node.is_object()) throw std::invalid_argument("problem entries must be strings or objects");
  reject_unknown_keys(node, {"benchmark", "qaplib", "shift", "rotation", "name"}, "problem");
  ProblemEntry entry;
  if (node.contains("qaplib")) {
    entry = make_problem_entry(node.at("qaplib").get<std::string>(), base_dir);
    if (entry.kind != ProblemKind::Qap)
      throw std::invalid_argument("\"qaplib\" must name a QAPLIB file, got a benchmark id");
  } else if (node.contains("benchmark")) {
    const auto text = node.at("benchmark").get<std::string>();
    const auto id = parse_benchmark_id(text);
    if (!id) throw std::invalid_argument("unknown benchmark function '" + text + "'");
    entry.kind = ProblemKind::Benchmark;
    entry.benchmark = *id;
    entry.name = to_string(*id);
    if (node.contains("shift")) entry.shift_path = resolve(base_dir, node.at("shift").get<std::string>());
    if (node.contains("rotation")) entry.rotation_path = resolve(base_dir, node.at("rotation").get<std::string>());
  } else {
    throw std::invalid_argument("problem object needs \"benchmark\" or \"qaplib\"");
  }
  if (node.contains("name")) entry.name = node.at("name").get<std::string>();
  return entry;
}

std::string algorithm_name(const AlgorithmEntry& entry) { return std::string(to_string(entry.algorithm)); }

ObjectiveSpec build_objective(const ProblemEntry& problem) {
  if (problem.kind == ProblemKind::Qap) {
    QapInstance inst = load_qaplib(problem.qaplib_path.string());
    inst.name = problem.name;
    return qap_objective(inst);
  }
  std::optional<CecTransform> transform;
  if (!problem.shift_path.empty() || !problem.rotation_path.empty()) {
    const BenchmarkMeta meta = benchmark_metadata(problem.benchmark);
    transform = load_cec_transform(problem.shift_path.string(), problem.rotation_path.string(), meta.dimension);
  }
  ObjectiveSpec spec = make_benchmark_objective(problem.benchmark, std::move(transform));
  spec.name = problem.name;
  return spec;
}

std::uint64_t fnv1a(std::uint64_t h, std::string_view bytes) {
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

// ---- CSV helpers ----------------------------------------------------------

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, ',')) cells.push_back(cell);
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

double parse_real(const std::string& text, const std::string& where) {
  if (text == "inf") return std::numeric_limits<double>::infinity();
  if (text == "-inf") return -std::numeric_limits<double>::infinity();
  double v = 0.0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || end != text.data() + text.size())
    throw std::runtime_error(where + ": not a number: '" + text + "'");
  return v;
}

std::uint64_t parse_u64(const std::string& text, const std::string& where) {
  std::uint64_t v = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || end != text.data() + text.size())
    throw std::runtime_error(where + ": not an integer: '" + text + "'");
  return v;
}

std::vector<std::vector<std::string>> read_csv(const fs::path& path, std::string_view expected_header) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::string line;
  if (!std::getline(in, line) || line != expected_header)
    throw std::runtime_error(path.string() + ": unexpected header");
  std::vector<std::vector<std::string>> rows;
  while (std::getline(in, line)) {
    if (!line.empty()) rows.push_back(split_csv_line(line));
  }
  return rows;
}

fs::path trace_path(const fs::path& dir, std::string_view kind, const std::string& problem,
                    const std::string& algorithm, std::size_t run) {
  return dir / kind / problem / algorithm / ("run" + std::to_string(run) + ".csv");
}

std::string trace_text(std::string_view value_column, const std::vector<double>& values) {
  std::string text = "iteration,";
  text += value_column;
  text += '\n';
  for (std::size_t i = 0; i < values.size(); ++i) {
    text += std::to_string(i + 1);
    text += ',';
    text += format_real(values[i]);
    text += '\n';
  }
  return text;
}

std::vector<double> read_trace(const fs::path& path, std::string_view value_column) {
  const auto rows = read_csv(path, "iteration," + std::string(value_column));
  std::vector<double> values;
  values.reserve(rows.size());
  for (const auto& row : rows) {
    if (row.size() != 2) throw std::runtime_error(path.string() + ": malformed row");
    values.push_back(parse_real(row[1], path.string()));
  }
  return values;
}

std::vector<double> best_costs(const std::vector<RunRecord>& runs) {
  std::vector<double> costs;
  costs.reserve(runs.size());
  for (const auto& r : runs) costs.push_back(r.best_cost);
  return costs;
}

void write_summaries(const ExperimentResults& results, const fs::path& dir, std::string_view reference) {
  const std::size_t np = results.problems.size();
  const std::size_t na = results.algorithms.size();

  std::string summary = "problem,algorithm,mean,std,elapsed_s\n";
  for (const SummaryRow& row : summarize(results)) {
    summary += row.problem + ',' + row.algorithm + ',' + format_real(row.mean) + ',' + format_real(row.std) + ',' +
               format_real(row.mean_elapsed_seconds) + '\n';
  }
  write_text(dir / "summary.csv", summary);

  std::string pvalues = "problem,comparison,p_value\n";
  const auto ref_it = std::find(results.algorithms.begin(), results.algorithms.end(), reference);
  if (ref_it != results.algorithms.end()) {
    const auto ref = static_cast<std::size_t>(ref_it - results.algorithms.begin());
    for (std::size_t p = 0; p < np; ++p) {
      const std::vector<double> a = best_costs(results.runs[p][ref]);
      for (std::size_t k = 0; k < na; ++k) {
        if (k == ref) continue;
        const std::vector<double> b = best_costs(results.runs[p][k]);
        pvalues += results.problems[p] + ',' + results.algorithms[ref] + " vs " + results.algorithms[k] + ',' +
                   format_real(wilcoxon_rank_sum(a, b)) + '\n';
      }
    }
  }
  write_text(dir / "pvalues.csv", pvalues);

  std::string ranks = "problem";
  for (const auto& name : results.algorithms) ranks += ',' + name;
  ranks += '\n';
  if (np > 0 && na > 0) {
    std::vector<std::vector<double>> means(np, std::vector<double>(na));
    for (std::size_t p = 0; p < np; ++p)
      for (std::size_t a = 0; a < na; ++a) means[p][a] = mean(best_costs(results.runs[p][a]));
    const FriedmanRanks fr = friedman_ranks(means);
    for (std::size_t p = 0; p < np; ++p) {
      ranks += results.problems[p];
      for (double r : fr.per_function[p]) ranks += ',' + format_real(r);
      ranks += '\n';
    }
    ranks += "Overall ranking";
    for (double r : fr.average) ranks += ',' + format_real(r);
    ranks += '\n';
  }
  write_text(dir / "ranks.csv", ranks);

  std::string balance = "problem,algorithm,xpl_percent,xpt_percent\n";
  for (std::size_t p = 0; p < np; ++p) {
    for (std::size_t a = 0; a < na; ++a) {
      const auto& runs = results.runs[p][a];
      if (runs.empty() || runs.front().diversity.empty()) continue;
      double xpl = 0.0;
      double xpt = 0.0;
      for (const auto& r : runs) {
        const PhaseBalance b = phase_balance(r.diversity);
        xpl += b.xpl_percent;
        xpt += b.xpt_percent;
      }
      const auto count = static_cast<double>(runs.size());
      balance += results.problems[p] + ',' + results.algorithms[a] + ',' + format_real(xpl / count) + ',' +
                 format_real(xpt / count) + '\n';
    }
  }
  write_text(dir / "balance.csv", balance);
}

}  // namespace

// ---- configuration --------------------------------------------------------

bool ExperimentConfig::diversity_for(const ProblemEntry& problem) const {
  if (record_diversity) return *record_diversity;
  return problem.kind == ProblemKind::Benchmark;
}

void ExperimentConfig::validate() const {
  if (problems.empty()) throw std::invalid_argument("experiment: no problems configured");
  if (algorithms.empty()) throw std::invalid_argument("experiment: no algorithms configured");
  if (runs < 1) throw std::invalid_argument("experiment: runs must be at least 1");
  std::set<std::string> names;
  for (const auto& p : problems) {
    if (p.name.empty() || p.name.find_first_of(",/\\\n") != std::string::npos)
      throw std::invalid_argument("experiment: invalid problem name '" + p.name + "'");
    if (!names.insert(p.name).second) throw std::invalid_argument("experiment: duplicate problem '" + p.name + "'");
    if (p.kind == ProblemKind::Qap && !fs::is_regular_file(p.qaplib_path))
      throw std::invalid_argument("experiment: QAPLIB file not found: " + p.qaplib_path.string());
    for (const fs::path* extra : {&p.shift_path, &p.rotation_path}) {
      if (!extra->empty() && !fs::is_regular_file(*extra))
        throw std::invalid_argument("experiment: data file not found: " + extra->string());
    }
  }
  std::set<Algorithm> seen;
  for (const auto& a : algorithms) {
    if (!seen.insert(a.algorithm).second)
      throw std::invalid_argument("experiment: algorithm listed twice: " + algorithm_name(a));
    RunConfig rc;
    rc.population_size = population_size;
    rc.max_iter = max_iter;
    rc.algorithm = a.algorithm;
    rc.params = a.params;
    rc.velocity_fraction = velocity_fraction;
    rc.threads = threads;
    rc.validate();
  }
}

ProblemEntry make_problem_entry(std::string_view spec, const fs::path& base_dir) {
  ProblemEntry entry;
  if (const auto id = parse_benchmark_id(spec)) {
    entry.kind = ProblemKind::Benchmark;
    entry.benchmark = *id;
    entry.name = to_string(*id);
    return entry;
  }
  const fs::path path = resolve(base_dir, std::string(spec));
  if (path.extension() != ".dat" && !fs::exists(path))
    throw std::invalid_argument("unknown problem '" + std::string(spec) +
                                "': not a benchmark id and not a QAPLIB .dat file");
  entry.kind = ProblemKind::Qap;
  entry.qaplib_path = path;
  entry.name = path.stem().string();
  return entry;
}

ExperimentConfig parse_experiment_config(std::string_view json_text, const fs::path& base_dir) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("config: ") + e.what());
  }
  if (!root.is_object()) throw std::invalid_argument("config: top level must be an object");
  reject_unknown_keys(root,
                      {"problems", "algorithms", "runs", "population_size", "max_iter", "base_seed", "output_dir",
                       "workers", "threads", "paired_seeds", "record_timing", "record_diversity",
                       "velocity_fraction", "reference_algorithm"},
                      "config");

  ExperimentConfig cfg;
  try {
    for (const auto& node : root.at("problems")) cfg.problems.push_back(parse_problem_entry(node, base_dir));
    if (root.contains("algorithms")) {
      for (const auto& node : root.at("algorithms")) cfg.algorithms.push_back(parse_algorithm_entry(node));
    } else {
      for (Algorithm a : {Algorithm::Dcso, Algorithm::Cso, Algorithm::De})
        cfg.algorithms.push_back({a, default_params(a)});
    }
    read_field(root, "runs", cfg.runs);
    read_field(root, "population_size", cfg.population_size);
    read_field(root, "max_iter", cfg.max_iter);
    read_field(root, "base_seed", cfg.base_seed);
    if (root.contains("output_dir")) cfg.output_dir = resolve(base_dir, root.at("output_dir").get<std::string>());
    read_field(root, "workers", cfg.workers);
    read_field(root, "threads", cfg.threads);
    read_field(root, "paired_seeds", cfg.paired_seeds);
    read_field(root, "record_timing", cfg.record_timing);
    if (root.contains("record_diversity") && !root.at("record_diversity").is_null())
      cfg.record_diversity = root.at("record_diversity").get<bool>();
    read_field(root, "velocity_fraction", cfg.velocity_fraction);
    if (root.contains("reference_algorithm"))
      cfg.reference_algorithm = parse_algorithm(root.at("reference_algorithm").get<std::string>());
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("config: ") + e.what());
  }
  return cfg;
}

ExperimentConfig load_experiment_config(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file: " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_experiment_config(buffer.str(), path.parent_path());
}

std::uint64_t derive_seed(std::uint64_t base_seed, std::string_view problem, std::string_view algorithm,
                          std::size_t run, bool paired) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  h = fnv1a(h, problem);
  h = fnv1a(h, std::string_view("\0", 1));
  if (!paired) h = fnv1a(h, algorithm);
  h = fnv1a(h, std::string_view("\0", 1));
  char bytes[8];
  for (int b = 0; b < 8; ++b) bytes[b] = static_cast<char>((static_cast<std::uint64_t>(run) >> (8 * b)) & 0xff);
  h = fnv1a(h, std::string_view(bytes, 8));
  return base_seed ^ mix64(h);
}

// ---- execution ------------------------------------------------------------

ExperimentResults run_experiment(const ExperimentConfig& config, const ProgressFn& progress) {
  config.validate();

  ExperimentResults results;
  std::vector<ObjectiveSpec> objectives;
  for (const auto& p : config.problems) {
    results.problems.push_back(p.name);
    objectives.push_back(build_objective(p));
  }
  for (const auto& a : config.algorithms) results.algorithms.push_back(algorithm_name(a));

  const std::size_t np = config.problems.size();
  const std::size_t na = config.algorithms.size();
  const std::size_t nr = config.runs;

  struct Task {
    std::size_t p, a, r;
    std::uint64_t seed;
  };
  std::vector<Task> tasks;
  tasks.reserve(np * na * nr);
  std::map<std::uint64_t, std::size_t> seed_owner;
  for (std::size_t p = 0; p < np; ++p) {
    for (std::size_t a = 0; a < na; ++a) {
      for (std::size_t r = 0; r < nr; ++r) {
        const std::uint64_t seed =
            derive_seed(config.base_seed, results.problems[p], results.algorithms[a], r, config.paired_seeds);
        const auto [it, fresh] = seed_owner.emplace(seed, tasks.size());
        const bool shared_by_pairing = !fresh && config.paired_seeds && tasks[it->second].p == p &&
                                       tasks[it->second].r == r;
        if (!fresh && !shared_by_pairing)
          throw std::runtime_error("experiment: derived seed collision for " + results.problems[p] + "/" +
                                   results.algorithms[a] + "/run" + std::to_string(r));
        tasks.push_back({p, a, r, seed});
      }
    }
  }

  results.runs.assign(np, std::vector<std::vector<RunRecord>>(na, std::vector<RunRecord>(nr)));
  std::mutex progress_mutex;
  parallel_for(tasks.size(), config.workers, [&](std::size_t t) {
    const Task& task = tasks[t];
    const AlgorithmEntry& alg = config.algorithms[task.a];
    RunConfig rc;
    rc.population_size = config.population_size;
    rc.max_iter = config.max_iter;
    rc.algorithm = alg.algorithm;
    rc.params = alg.params;
    rc.seed = task.seed;
    rc.record_diversity = config.diversity_for(config.problems[task.p]);
    rc.velocity_fraction = config.velocity_fraction;
    rc.threads = config.threads;

    RunResult rr;
    try {
      rr = run_optimizer(objectives[task.p], rc);
    } catch (const std::exception& e) {
      throw std::runtime_error("run failed for " + results.problems[task.p] + "/" + results.algorithms[task.a] +
                               "/run" + std::to_string(task.r) + ": " + e.what());
    }
    RunRecord& rec = results.runs[task.p][task.a][task.r];
    rec.run = task.r;
    rec.seed = task.seed;
    rec.best_cost = rr.best_cost;
    rec.elapsed_seconds = config.record_timing ? rr.elapsed_seconds : 0.0;
    rec.convergence = std::move(rr.convergence);
    rec.diversity = std::move(rr.diversity_trace);
    if (progress) {
      std::lock_guard lock(progress_mutex);
      progress(results.problems[task.p], results.algorithms[task.a], task.r, rec.best_cost);
    }
  });
  return results;
}

std::vector<SummaryRow> summarize(const ExperimentResults& results) {
  std::vector<SummaryRow> rows;
  for (std::size_t p = 0; p < results.problems.size(); ++p) {
    for (std::size_t a = 0; a < results.algorithms.size(); ++a) {
      const auto& runs = results.runs[p][a];
      if (runs.empty()) continue;
      const std::vector<double> costs = best_costs(runs);
      std::vector<double> elapsed;
      for (const auto& r : runs) elapsed.push_back(r.elapsed_seconds);
      rows.push_back({results.problems[p], results.algorithms[a], mean(costs), sample_std(costs), mean(elapsed)});
    }
  }
  return rows;
}

// ---- reports --------------------------------------------------------------

std::string format_real(double value) {
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  if (ec != std::errc{}) throw std::runtime_error("format_real: conversion failed");
  return std::string(buf, end);
}

void emit_reports(const ExperimentResults& results, const fs::path& output_dir, std::string_view reference_algorithm) {
  if (results.problems.empty() || results.algorithms.empty())
    throw std::invalid_argument("emit_reports: no results");
  std::error_code ec;
  fs::create_directories(output_dir, ec);
  if (ec || !fs::is_directory(output_dir))
    throw std::runtime_error("cannot create output directory " + output_dir.string());

  std::string runs_csv = "problem,algorithm,run,seed,best_cost,elapsed_s\n";
  for (std::size_t p = 0; p < results.problems.size(); ++p) {
    for (std::size_t a = 0; a < results.algorithms.size(); ++a) {
      const std::string& prob = results.problems[p];
      const std::string& alg = results.algorithms[a];
      for (const RunRecord& r : results.runs[p][a]) {
        runs_csv += prob + ',' + alg + ',' + std::to_string(r.run) + ',' + std::to_string(r.seed) + ',' +
                    format_real(r.best_cost) + ',' + format_real(r.elapsed_seconds) + '\n';
        const fs::path conv = trace_path(output_dir, "convergence", prob, alg, r.run);
        fs::create_directories(conv.parent_path());
        write_text(conv, trace_text("best_so_far", r.convergence));
        if (!r.diversity.empty()) {
          const fs::path div = trace_path(output_dir, "diversity", prob, alg, r.run);
          fs::create_directories(div.parent_path());
          write_text(div, trace_text("div", r.diversity));
        }
      }
    }
  }
  write_text(output_dir / "runs.csv", runs_csv);
  write_summaries(results, output_dir, reference_algorithm);
}

ExperimentResults load_results(const fs::path& output_dir) {
  const fs::path runs_path = output_dir / "runs.csv";
  const auto rows = read_csv(runs_path, "problem,algorithm,run,seed,best_cost,elapsed_s");
  if (rows.empty()) throw std::runtime_error(runs_path.string() + ": no runs recorded");

  ExperimentResults results;
  auto index_of = [](std::vector<std::string>& names, const std::string& name) {
    const auto it = std::find(names.begin(), names.end(), name);
    if (it != names.end()) return static_cast<std::size_t>(it - names.begin());
    names.push_back(name);
    return names.size() - 1;
  };
  struct Loaded {
    std::size_t p, a;
    RunRecord rec;
  };
  std::vector<Loaded> loaded;
  for (const auto& row : rows) {
    if (row.size() != 6) throw std::runtime_error(runs_path.string() + ": malformed row");
    Loaded l;
    l.p = index_of(results.problems, row[0]);
    l.a = index_of(results.algorithms, row[1]);
    l.rec.run = static_cast<std::size_t>(parse_u64(row[2], runs_path.string()));
    l.rec.seed = parse_u64(row[3], runs_path.string());
    l.rec.best_cost = parse_real(row[4], runs_path.string());
    l.rec.elapsed_seconds = parse_real(row[5], runs_path.string());
    const fs::path conv = trace_path(output_dir, "convergence", row[0], row[1], l.rec.run);
    if (fs::exists(conv)) l.rec.convergence = read_trace(conv, "best_so_far");
    const fs::path div = trace_path(output_dir, "diversity", row[0], row[1], l.rec.run);
    if (fs::exists(div)) l.rec.diversity = read_trace(div, "div");
    loaded.push_back(std::move(l));
  }
  results.runs.assign(results.problems.size(), std::vector<std::vector<RunRecord>>(results.algorithms.size()));
  for (auto& l : loaded) results.runs[l.p][l.a].push_back(std::move(l.rec));
  return results;
}

void rebuild_reports(const fs::path& output_dir, std::string_view reference_algorithm) {
  write_summaries(load_results(output_dir), output_dir, reference_algorithm);
}

}  // namespace catswarm
