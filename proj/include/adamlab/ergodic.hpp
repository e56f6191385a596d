#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "adamlab/schedules.hpp"

namespace adamlab {

struct Uniform {};

/// w_{n,k} = k^alpha / sum_j j^alpha
struct PowerWeight {
  double alpha = 1.0;
};

/// w_{n,k} = eta_k / sum_j eta_j
struct StepWeighted {
  ScheduleSpec eta;
};

/// All weight on the first index attaining min_{k<=n} values_k.
struct MinimumSelector {};

/// All weight on index tau (1-based).
struct IndexSelector {
  std::int64_t tau = 1;
};

using WeightScheme = std::variant<Uniform, PowerWeight, StepWeighted, MinimumSelector, IndexSelector>;

std::string scheme_name(const WeightScheme& scheme);

/// Weights w_{n,1..n}, renormalized to sum to 1. MinimumSelector needs the
/// value sequence and throws ValidationError here.
std::vector<double> weights(const WeightScheme& scheme, std::int64_t n);
std::vector<double> weights(const WeightScheme& scheme, std::int64_t n,
                            const std::vector<double>& values);

double ergodic_average(const std::vector<double>& values, const WeightScheme& scheme,
                       std::int64_t n);

/// values_n
double last_iterate(const std::vector<double>& values, std::int64_t n);

struct Prop1Row {
  std::int64_t n = 0;
  double max_weight = 0.0;
  double average = 0.0;
  double gap = 0.0;  ///< |average - tail estimate|
};

struct Prop1Report {
  std::string scheme;
  bool tail_stable = false;
  double tail_spread = 0.0;  ///< max - min over the tail window
  double tail_estimate = 0.0;
  bool max_weight_decreasing = false;
  bool passed = false;
  std::string note;
  std::vector<Prop1Row> rows;
};

struct Prop1Options {
  double tail_fraction = 0.1;
  double tolerance = 1e-6;  ///< relative to max |values|
};

/// Numeric check that ergodic averages follow a converging sequence. Throws
/// ValidationError for selectors and for step weights with a summable eta.
Prop1Report prop1_audit(const std::vector<double>& values, const WeightScheme& scheme,
                        const std::vector<std::int64_t>& n_grid, const Prop1Options& opts = {});

}  // namespace adamlab
