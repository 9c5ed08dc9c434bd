#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "evomlp/dataset.hpp"
#include "evomlp/evolution.hpp"

namespace evomlp {

enum class Problem { glass1a, f2 };

const char* to_string(Problem problem);
std::optional<Problem> parse_problem(const std::string& name);

struct ExperimentConfig {
  Problem problem = Problem::f2;
  int runs = 10;
  std::uint64_t master_seed = 1;
  EvolutionConfig evolution;       // per-run seed derives from master_seed
  std::string data_path;           // Proben1 file, glass1a only
  Index f2_points = 200;
  std::filesystem::path out_dir;   // empty: nothing written
  int threads = 1;                 // across runs; 0 = hardware concurrency
};

struct RunSummary {
  int run = 0;
  std::uint64_t seed = 0;
  bool failed = false;
  std::string failure;
  Scalar test_error = 0.0;        // percent or NMSE of the best network
  Scalar validation_error = 0.0;  // the winning evaluation's error_after
  Index weight_count = 0;
  int generation_of_best = 0;
  double wall_time_seconds = 0.0;  // never written to output files
};

struct Stats {
  double mean = 0.0;
  double stddev = 0.0;  // sample (n-1); 0 when n < 2
};

Stats mean_stddev(const std::vector<double>& values);

struct MeanTraceRow {
  int generation = 0;
  Scalar best_error_after = 0.0;
  std::optional<Scalar> best_error_before;
  Scalar best_weights = 0.0;
  Scalar mean_error_after = 0.0;
  Scalar mean_weights = 0.0;
};

struct AggregateReport {
  std::string approach;  // strategy mode name
  Stats error;           // test error over successful runs
  Stats weights;
  Stats generations;     // generation_of_best
  std::vector<MeanTraceRow> mean_trace;  // per-generation mean across runs
  int runs_total = 0;
  int runs_failed = 0;
};

// Published results the tables compare against; empty fields stay empty in
// the CSV.
struct ReferenceRow {
  std::string approach;
  std::optional<double> error_mean, error_std, size_mean, size_std,
      generations_mean, generations_std;
};

std::vector<ReferenceRow> reference_rows(Problem problem);

// Builds the problem's dataset (parses config.data_path for glass1a,
// samples f2 otherwise).
Dataset load_problem_data(const ExperimentConfig& config);

// Executes `runs` independent evolutions with seeds derived from
// master_seed, optionally in parallel; summaries come back in run order.
// With out_dir set, writes run_<r>/trace.csv per run plus summary.csv,
// summary.txt, mean_trace.csv and runs.csv. Reported test error is the
// test-split error of the best genome after its deterministic training
// pass; test data never influences evolution. Failed runs are kept in the
// list, counted, and excluded from aggregates.
std::pair<std::vector<RunSummary>, AggregateReport> run_experiment(
    const ExperimentConfig& config);

// generation,best_error_after,best_error_before,best_weights,
// mean_error_after,mean_weights; best_error_before is empty outside
// baldwinian mode; reals carry 6 significant digits.
void emit_generation_csv(const std::vector<GenerationStats>& trace,
                         const std::filesystem::path& path);
void emit_mean_trace_csv(const std::vector<MeanTraceRow>& trace,
                         const std::filesystem::path& path);

// Machine CSV (approach,error_mean,error_std,size_mean,size_std,
// generations_mean,generations_std) and an aligned plain-text table with
// the same numbers.
void emit_summary_table(const AggregateReport& report,
                        const std::vector<ReferenceRow>& references,
                        const std::filesystem::path& csv_path,
                        const std::filesystem::path& txt_path);

std::string summary_text(const AggregateReport& report,
                         const std::vector<ReferenceRow>& references);

}  // namespace evomlp
