#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "adamlab/optimizer.hpp"
#include "adamlab/problems.hpp"
#include "adamlab/schedules.hpp"

namespace adamlab {

// ---------------------------------------------------------------------------
// Constants
// ---------------------------------------------------------------------------

/// Constants of the min-output bound
///   (C1 + C2 sum eta_k (1 - theta_k) + C3 sum eta_k^2) / sum eta_k.
struct MinBoundConstants {
  double c1 = 0.0, c2 = 0.0, c3 = 0.0;
};

/// Same shape with denominator K eta_K (uniformly sampled output).
struct UniformBoundConstants {
  double c1p = 0.0, c2p = 0.0, c3p = 0.0;
};

/// Constants of the PL last-iterate bound
///   (C4/(1-beta)^2 + C6)/(K+1) + C5/(1-beta)^2 * sum k (1 - theta_k) / (K (K+1)).
struct PLBoundConstants {
  double c4 = 0.0, c5 = 0.0, c6 = 0.0;
  double beta = 0.0;
};

MinBoundConstants constants_thm1(double M, double epsilon, double beta, int d, double L, double C0,
                                 double C0_tilde, double f1_gap);

UniformBoundConstants constants_thm4(double M, double epsilon, double beta, int d, double L,
                                     double C0, double C0_tilde, double f1_gap);

PLBoundConstants constants_thm3(double M, double epsilon, double beta, double L, double v, int d);

// ---------------------------------------------------------------------------
// Bound evaluators
// ---------------------------------------------------------------------------

using SequenceFn = std::function<double(std::int64_t)>;

double bound_thm1(const MinBoundConstants& c, const SequenceFn& eta, const SequenceFn& theta,
                  std::int64_t K);
double bound_thm1(const MinBoundConstants& c, const HyperParams& hp, std::int64_t K);

double bound_thm4(const UniformBoundConstants& c, const SequenceFn& eta, const SequenceFn& theta,
                  std::int64_t K);
double bound_thm4(const UniformBoundConstants& c, const HyperParams& hp, std::int64_t K);

double bound_thm3(const PLBoundConstants& c, const SequenceFn& theta, std::int64_t K);
double bound_thm3(const PLBoundConstants& c, const ScheduleSpec& theta, std::int64_t K);

/// Bounds at every K of an increasing grid in one pass over k.
std::vector<double> bound_thm1_series(const MinBoundConstants& c, const HyperParams& hp,
                                      const std::vector<std::int64_t>& Ks);
std::vector<double> bound_thm4_series(const UniformBoundConstants& c, const HyperParams& hp,
                                      const std::vector<std::int64_t>& Ks);
std::vector<double> bound_thm3_series(const PLBoundConstants& c, const ScheduleSpec& theta,
                                      const std::vector<std::int64_t>& Ks);

// ---------------------------------------------------------------------------
// Lemma checks
// ---------------------------------------------------------------------------

struct LemmaSumResult {
  double lhs1 = 0.0, rhs1 = 0.0, lhs2 = 0.0, rhs2 = 0.0;
  bool holds = false;
};

/// Geometric-tail sum inequalities, K = b.size():
///   sum_k sum_{j<=k} beta^{k-j} b_j     <= 1/(1-beta)   sum_k b_k
///   sum_k k sum_{j<=k} beta^{k-j} b_j   <= 1/(1-beta)^2 sum_k k b_k
LemmaSumResult lemma_sum_check(double beta, const std::vector<double>& b);

struct LemmaRecursionResult {
  double direct = 0.0;  ///< Delta_{K+1} from unrolling the recursion
  double bound = 0.0;   ///< closed form with Gamma products
  bool holds = false;
};

/// Gamma_1 = 1, Gamma_k = (1 - gamma_k) Gamma_{k-1}.
std::vector<double> gamma_products(const std::vector<double>& gamma);

/// Delta_{k+1} = (1 - gamma_k) Delta_k + B_k against
/// Gamma_K (1 - gamma_1) Delta_1 + Gamma_K sum_k B_k / Gamma_k.
LemmaRecursionResult lemma_recursion_check(const std::vector<double>& gamma, double delta1,
                                           const std::vector<double>& B);

// ---------------------------------------------------------------------------
// Trajectory audit
// ---------------------------------------------------------------------------

struct AuditCheck {
  std::string name;
  std::int64_t checked = 0;
  std::int64_t violations = 0;
  double min_slack = 0.0;  ///< smallest relative slack seen (negative on violation)
  std::optional<std::int64_t> first_violation_k;
};

struct AuditReport {
  std::vector<AuditCheck> checks;
  std::int64_t steps_audited = 0;
  std::int64_t steps_skipped = 0;  ///< after a box exit, where ||g|| <= M is not guaranteed
  bool passed = false;
};

/// Pointwise inequalities at every audited step:
///   preconditioned-gradient: ||grad^2 / sqrt(v^{k-1}+eps)||_1 >= ||grad||^2 / sqrt(M^2+eps)
///   preconditioner-drift:    ||m/sqrt(v^{k-1}+eps) - m/sqrt(v^k+eps)|| <= sqrt(d) M^3 (1-theta_k) / eps^{3/2}
///   m-bound, v-bound, scaled-m-bound: ||m|| <= M, ||v|| <= M^2, ||m/sqrt(v+eps)|| <= M/sqrt(eps)
/// Throws StateError when the trajectory has no snapshots.
AuditReport trajectory_audit(const Trajectory& traj, const Problem& problem, const HyperParams& hp,
                             double rel_tol = 1e-9);

// ---------------------------------------------------------------------------
// Rate fitting
// ---------------------------------------------------------------------------

struct RateFit {
  double exponent = 0.0;
  double intercept = 0.0;
  double r_squared = 1.0;
  bool zero_variance = false;
  /// max/min of value * sqrt(K) / ln K, filled for log-corrected fits
  std::optional<double> flatness;
};

/// Least-squares slope of log(value) against log(K). With log_correction the
/// fit is done on value * sqrt(K) / ln K instead.
RateFit rate_fit(const std::vector<std::pair<double, double>>& points, bool log_correction = false);

/// (value * ln K) at the last point over the same at the first point.
double inverse_log_ratio(const std::vector<std::pair<double, double>>& points);

// ---------------------------------------------------------------------------
// Reports
// ---------------------------------------------------------------------------

/// One-sided 95% normal-approximation half-width.
constexpr double kOneSidedZ95 = 1.6448536269514722;

struct MeanCI {
  double mean = 0.0;
  double halfwidth = 0.0;
};

/// Sample mean and z * s / sqrt(n); halfwidth 0 for a single sample.
MeanCI mean_ci(const std::vector<double>& samples, double z = kOneSidedZ95);

struct BoundRow {
  std::int64_t K = 0;
  double bound = 0.0;
  double empirical_mean = 0.0;
  double ci_halfwidth = 0.0;
  bool dominated = false;  ///< mean + halfwidth <= bound
};

struct BoundReport {
  std::string statistic;
  std::string bound_name;
  std::vector<BoundRow> rows;
  std::optional<RateFit> bound_fit;
  std::optional<RateFit> empirical_fit;
  bool all_dominated = false;
};

BoundReport make_bound_report(std::string statistic, std::string bound_name,
                              const std::vector<std::int64_t>& Ks, const std::vector<double>& bound,
                              const std::vector<MeanCI>& empirical);

/// Header: K,bound,empirical_mean,ci_halfwidth,verdict
std::string bound_report_csv(const BoundReport& report);

}  // namespace adamlab
