#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "adamlab/bounds.hpp"
#include "adamlab/ergodic.hpp"
#include "adamlab/optimizer.hpp"
#include "adamlab/problems.hpp"
#include "adamlab/schedules.hpp"
#include "json.hpp"

namespace adamlab {

using Json = nlohmann::json;

/// Fallbacks for pl_step fields left out of a config.
struct PLStepDefaults {
  std::optional<double> M, epsilon, beta, v;
};

ScheduleSpec schedule_from_json(const Json& j, const PLStepDefaults& defaults = {});
Json to_json(const ScheduleSpec& spec);

/// {"eta": {...}, "theta": {...}, "beta": {...}, "epsilon": ..., "beta_cap": ...}.
/// beta_cap defaults to the constant beta when beta is constant.
HyperParams hyperparams_from_json(const Json& j, const PLStepDefaults& defaults = {});
Json to_json(const HyperParams& hp);

Json to_json(const ScheduleVerdict& v);
Json to_json(const std::vector<ScheduleVerdict>& vs);
Json to_json(const ImplicationReport& r);
Json to_json(const CertifiedConstants& c);
Json to_json(const StepRecord& r);
Json to_json(const Trajectory& t);
Json to_json(const AuditReport& r);
Json to_json(const RateFit& f);
Json to_json(const BoundReport& r);
Json to_json(const Prop1Report& r);
Json to_json(const LemmaSumResult& r);
Json to_json(const LemmaRecursionResult& r);

/// Stable text form: sorted keys, fixed indentation, trailing newline.
std::string canonical_dump(const Json& j);

std::uint64_t fnv1a64(const std::string& bytes);
std::string hex64(std::uint64_t x);

std::string read_text_file(const std::string& path);
Json read_json_file(const std::string& path);
/// Writes to a temporary sibling and renames it into place.
void write_file_atomic(const std::string& path, const std::string& content);

}  // namespace adamlab
