#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "adamlab/io.hpp"

namespace adamlab {

extern const char* const kToolVersion;

struct ProblemConfig {
  std::string id = "quadratic";
  int dim = 1;
  double box_radius = 10.0;
  NoiseModel noise;
  double resolution = 1e-3;
};

enum class TrajectoryFormat { None, Csv, Json, Both };

struct ExperimentConfig {
  ProblemConfig problem;
  std::optional<Vec> x1;
  Json hyperparams_json = Json::object();  ///< as written; pl_step gaps filled at resolve time
  std::int64_t K = 1000;
  std::vector<std::uint64_t> seeds;
  std::vector<std::string> statistics;  ///< min_output, uniform_output, last_iterate, f_gap
  std::vector<std::string> bounds;      ///< ids: thm1 (min output), thm4 (uniform output), thm3 (PL)
  std::vector<std::int64_t> k_grid;
  std::int64_t thinning = 0;
  bool audit = false;
  bool allow_nonconvergent = false;
  int workers = 0;  ///< 0: hardware concurrency
  std::string output_dir;
  TrajectoryFormat trajectory_format = TrajectoryFormat::Csv;
  std::vector<double> sweep_eta_exponents;
  Json canonical;  ///< normalized config, hashed into the manifest
};

/// Geometric grid with `per_decade` points per decade from lo to hi, rounded
/// to integers, duplicates dropped, hi always included.
std::vector<std::int64_t> geometric_grid(std::int64_t lo, std::int64_t hi, int per_decade);

/// Relative output_dir is resolved against base_dir.
ExperimentConfig parse_config(const Json& j, const std::string& base_dir = ".");
ExperimentConfig load_config(const std::string& path);

/// Problem and hyperparameters as the run will use them (certification
/// included, pl_step gaps filled from certified constants).
struct ResolvedSetup {
  Problem problem;
  HyperParams hp;
  Vec x1;
};
ResolvedSetup resolve(const ExperimentConfig& cfg);

/// SC-Adam and SC-Zou verdicts for the config's schedules.
Json check_schedule_report(const ExperimentConfig& cfg, bool* sc_adam_passed = nullptr);

struct RunSummary {
  std::string manifest_path;
  bool valid = false;       ///< no box exits, no aborted trajectories
  bool all_passed = false;  ///< valid and every verdict passed
  Json manifest;
};

/// Runs every seed, persists trajectories, statistics.json and manifest.json
/// under cfg.output_dir. Sweep configs run one child experiment per exponent.
RunSummary run_experiment(const ExperimentConfig& cfg);

Json load_manifest(const std::string& path);

/// Re-runs every seed with full state capture, checks the result matches the
/// persisted statistics, and audits the pointwise inequalities.
Json audit_manifest(const std::string& manifest_path, bool* passed = nullptr);

/// Per-seed trend of Z_K = min_{k<=K} ||grad f(x^k)||^2 * K^{1-q}. Throws
/// ValidationError unless eta = c/k^q with 1/2 < q < 1 and theta = 1 - 1/k^p
/// with p > 1 - q.
Json as_rate_diagnostic(const Json& manifest, std::optional<double> q = std::nullopt,
                        double rho = 0.5);

/// Decade-decrease test on the mean last-iterate gradient norm (and f gap on
/// PL problems). Throws ValidationError naming the failed series condition.
Json nonergodic_diagnostic(const Json& manifest, double rho = 0.3);

/// Both diagnostics, each either a result or a refusal.
Json rates_report(const std::string& manifest_path, int* status = nullptr);

/// format: "csv", "json" or "table". Returns the list of written files
/// (csv, json) or the table text (table, also written to report.txt).
Json report(const std::string& manifest_path, const std::string& format);

/// Brute-force lemma suites on random instances.
Json lemma_suite(int instances, std::uint64_t seed, bool* passed = nullptr);

}  // namespace adamlab
