#include "afsa_wsn/report.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

namespace afsa_wsn {

std::string format_number(double value) {
  if (std::isnan(value)) return "nan";
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return ec == std::errc{} ? std::string(buf, end) : std::string("nan");
}

std::string rounds_csv(const RunResult& run) {
  std::ostringstream out;
  out << "round,alive_count,total_energy,plan_fitness,head_ids\n";
  for (const auto& m : run.rounds) {
    out << m.round << ',' << m.alive_count << ',' << format_number(m.total_energy) << ','
        << format_number(m.plan_fitness) << ',';
    for (std::size_t i = 0; i < m.head_ids.size(); ++i) out << (i ? ";" : "") << m.head_ids[i];
    out << '\n';
  }
  return out.str();
}

nlohmann::json result_json(const RunResult& run, Algorithm algorithm) {
  nlohmann::json rounds = nlohmann::json::array();
  for (const auto& m : run.rounds) {
    rounds.push_back({{"round", m.round},
                      {"alive_count", m.alive_count},
                      {"total_energy", m.total_energy},
                      {"plan_fitness", m.plan_fitness},
                      {"head_ids", m.head_ids}});
  }
  auto optional_round = [](const std::optional<int>& r) -> nlohmann::json {
    return r ? nlohmann::json(*r) : nlohmann::json(nullptr);
  };
  return {{"algorithm", algorithm_name(algorithm)},
          {"seed", run.seed},
          {"fnd", optional_round(run.fnd)},
          {"lnd", optional_round(run.lnd)},
          {"initial_energy", run.initial_energy},
          {"rounds", std::move(rounds)}};
}

std::string summary_csv(const ExperimentSummary& summary) {
  std::ostringstream out;
  out << "algorithm,fnd_mean,fnd_std,lnd_mean,lnd_std\n";
  for (const auto& s : summary.algorithms) {
    out << algorithm_name(s.algorithm) << ',' << format_number(s.fnd.mean) << ','
        << format_number(s.fnd.stddev) << ',' << format_number(s.lnd.mean) << ','
        << format_number(s.lnd.stddev) << '\n';
  }
  return out.str();
}

std::string energy_curve_csv(const ExperimentSummary& summary) {
  std::ostringstream out;
  out << "round";
  for (const auto& s : summary.algorithms) out << ',' << algorithm_name(s.algorithm);
  out << '\n';
  const std::size_t rows = summary.algorithms.empty() ? 0 : summary.algorithms.front().energy_curve.size();
  for (std::size_t r = 0; r < rows; ++r) {
    out << r;
    for (const auto& s : summary.algorithms) out << ',' << format_number(s.energy_curve[r]);
    out << '\n';
  }
  return out.str();
}

}  // namespace afsa_wsn
