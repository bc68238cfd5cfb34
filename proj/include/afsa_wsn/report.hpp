#pragma once

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "afsa_wsn/simulation.hpp"

namespace afsa_wsn {

inline constexpr std::string_view kToolVersion = "0.1.0";

/// Shortest decimal form that parses back to the same double; "nan" for NaN.
std::string format_number(double value);

/// Header `round,alive_count,total_energy,plan_fitness,head_ids`; head ids
/// are ';'-separated.
std::string rounds_csv(const RunResult& run);

nlohmann::json result_json(const RunResult& run, Algorithm algorithm);

/// Header `algorithm,fnd_mean,fnd_std,lnd_mean,lnd_std`.
std::string summary_csv(const ExperimentSummary& summary);

/// Header `round,<algorithm>...`; one row per round 0..max_rounds.
std::string energy_curve_csv(const ExperimentSummary& summary);

}  // namespace afsa_wsn
