#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace adamlab {

// ---------------------------------------------------------------------------
// Schedule families. Each evaluates in closed form at k >= 1.
// ---------------------------------------------------------------------------

/// eta_k = scale * k^(-exponent)
struct PowerEta {
  double scale = 1.0;
  double exponent = 0.5;
};

/// theta_k = 1 - 1/k^exponent for k >= 2; theta_1 = 1 - 1/2^exponent so the
/// value stays inside (0, 1).
struct PowerTheta {
  double exponent = 1.0;
};

struct ConstantTheta {
  double value = 0.999;
};

struct ConstantBeta {
  double value = 0.9;
};

/// eta_k = sqrt(M^2 + eps) / ((1 - beta) * v) / (k + 1), the step size that
/// gives the O(1/K) last-iterate rate under the PL condition.
struct PLStep {
  double M = 1.0;
  double epsilon = 1.0;
  double beta = 0.0;
  double v = 1.0;
};

/// Finite table; values[k - 1] is the k-th term.
struct Tabulated {
  std::vector<double> values;
};

using ScheduleSpec =
    std::variant<PowerEta, PowerTheta, ConstantTheta, ConstantBeta, PLStep, Tabulated>;

enum class ScheduleRole { Eta, Theta, Beta };

const char* to_string(ScheduleRole role);

/// Short machine name of the family ("power_eta", "tabulated", ...).
std::string schedule_kind(const ScheduleSpec& spec);

/// Throws ValidationError if the family cannot play `role` or its parameters
/// fall outside the admissible range for that role.
void validate_schedule(const ScheduleSpec& spec, ScheduleRole role);

/// Closed-form value at iteration k. Throws DomainError for k < 1 and
/// RangeError when a Tabulated schedule is too short.
double eval_schedule(const ScheduleSpec& spec, std::int64_t k);

/// eta_1..eta_n (or theta, beta) as a dense vector.
std::vector<double> tabulate(const ScheduleSpec& spec, std::int64_t n);

struct HyperParams {
  ScheduleSpec eta = PowerEta{};
  ScheduleSpec theta = PowerTheta{};
  ScheduleSpec beta = ConstantBeta{};
  double epsilon = 1e-8;
  double beta_cap = 0.9;  ///< upper bound beta < 1 on every beta_k
};

void validate(const HyperParams& hp);

// ---------------------------------------------------------------------------
// Sufficient-condition checkers
// ---------------------------------------------------------------------------

enum class CheckMode { Analytic, Numeric };

const char* to_string(CheckMode mode);

struct VerdictWitness {
  std::string note;
  std::optional<double> limit;  ///< analytic limit of the tested ratio
  std::optional<double> ratio_at_tenth;
  std::optional<double> ratio_at_horizon;
  std::optional<std::int64_t> first_violation;
  std::optional<double> c0;        ///< lower Theta() constant
  std::optional<double> c0_tilde;  ///< upper Theta() constant
};

struct ScheduleVerdict {
  std::string condition_id;
  bool passed = false;
  CheckMode mode = CheckMode::Analytic;
  VerdictWitness witness;
};

struct CheckOptions {
  std::int64_t horizon = 100000;
  /// A ratio "tends to 0" numerically when r(H) <= decay_factor * r(H/10) ...
  double decay_factor = 0.5;
  /// ... and r(H) <= abs_ceiling.
  double abs_ceiling = 1e300;
  /// Max allowed (running max from k to H) / value for the Theta sandwich.
  double sandwich_constant = 10.0;
  /// Decide every condition numerically even for parametric families.
  bool force_numeric = false;
};

/// One verdict per condition 1..5 (ids "SC-Adam-1" ... "SC-Adam-5").
std::vector<ScheduleVerdict> check_sc_adam(const HyperParams& hp, const CheckOptions& opts = {});

/// One verdict per condition z1..z4 (ids "SC-Zou-z1" ... "SC-Zou-z4").
std::vector<ScheduleVerdict> check_sc_zou(const HyperParams& hp, const CheckOptions& opts = {});

bool all_passed(const std::vector<ScheduleVerdict>& verdicts);

/// Constants (C0, C0~) for eta_k = Theta(alpha_k) taken from the condition-3
/// verdict; nullopt when that condition fails.
struct ThetaConstants {
  double c0 = 1.0;
  double c0_tilde = 1.0;
};
std::optional<ThetaConstants> theta_constants(const std::vector<ScheduleVerdict>& sc_adam);

struct ImplicationReport {
  int samples = 0;
  int zou_passed = 0;
  int adam_passed = 0;
  int violations = 0;
  std::vector<std::string> counterexamples;
};

/// Draws random power-family schedules and checks that passing SC-Zou implies
/// passing SC-Adam.
ImplicationReport implication_property(int sample_count, std::uint64_t rng_seed);

}  // namespace adamlab
