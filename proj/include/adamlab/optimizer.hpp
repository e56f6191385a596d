#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "adamlab/problems.hpp"
#include "adamlab/schedules.hpp"

namespace adamlab {

struct AdamState {
  Vec x;
  Vec m;
  Vec v;
  std::int64_t k = 0;
};

/// k = 0, m = v = 0, x = x1. Throws ValidationError on non-finite input.
AdamState init_state(const Vec& x1);

/// One step of the update
///   m' = beta m + (1 - beta) g,  v' = theta v + (1 - theta) g^2,
///   x' = x - eta m' / sqrt(v' + eps)
/// with eps inside the square root and no bias correction.
AdamState adam_step(const AdamState& state, const Vec& g, double eta, double beta, double theta,
                    double epsilon);

/// In-place form of adam_step.
void adam_step_inplace(AdamState& state, const Vec& g, double eta, double beta, double theta,
                       double epsilon);

struct StepRecord {
  std::int64_t k = 0;
  double grad_norm = 0.0;  ///< ||grad f(x^k)||
  double stoch_grad_norm = 0.0;
  double f_gap = 0.0;  ///< f(x^k) - f*
  double m_norm = 0.0;
  double v_norm = 0.0;
  double update_norm = 0.0;  ///< ||x^{k+1} - x^k||
  double eta = 0.0;
  double theta = 0.0;
  double beta = 0.0;
  // prefix statistics over every step 1..k, not just the recorded ones
  double grad_sq_sum = 0.0;
  double grad_sq_min = 0.0;
};

/// Full state kept at audited steps.
struct AuditSnapshot {
  std::int64_t k = 0;
  Vec grad;    ///< grad f(x^k)
  Vec g;       ///< oracle draw
  Vec m;       ///< m^k
  Vec v_prev;  ///< v^{k-1}
  Vec v;       ///< v^k
  double eta = 0.0;
  double theta = 0.0;
  double beta = 0.0;
};

struct Trajectory {
  std::string problem_id;
  HyperParams hp;
  std::uint64_t seed = 0;
  std::int64_t K = 0;
  std::int64_t thinning = 1;
  Vec x1;
  Vec x_final;
  std::vector<StepRecord> records;
  std::vector<AuditSnapshot> snapshots;
  std::optional<std::int64_t> box_exit_k;  ///< first k with x^k outside the box
  bool aborted = false;
  std::string abort_reason;
};

struct RunOptions {
  std::int64_t thinning = 0;  ///< 0 picks default_thinning(K)
  std::optional<Vec> x1;      ///< default: 0.8 R in every coordinate
  bool audit = false;
  std::vector<std::int64_t> extra_ks;  ///< always recorded in addition to the stride
};

/// 1 for K <= 1e4, else ceil(K / 1e4).
std::int64_t default_thinning(std::int64_t K);

Vec default_x1(const Problem& problem);

Trajectory run(const Problem& problem, const HyperParams& hp, std::uint64_t seed, std::int64_t K,
               const RunOptions& opts = {});

/// Header: k,grad_norm,stoch_grad_norm,f_gap,m_norm,v_norm,update_norm,eta,theta,beta
std::string trajectory_csv(const Trajectory& traj);

/// Shortest round-trip decimal form.
std::string format_double(double x);

}  // namespace adamlab
