#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "afsa_wsn/network.hpp"
#include "afsa_wsn/simulation.hpp"

namespace afsa_wsn {

/// Everything a run needs besides seeds. Defaults reproduce the reference
/// setup: 100 nodes on a 100 x 100 m field, station at (50, 175), 4000-bit
/// packets, 5% cluster heads.
struct ExperimentConfig {
  NetworkConfig network;
  AlgorithmParams algorithms;
};

/// Raised for unreadable, malformed, or invalid configuration. `problems`
/// holds every issue found, each naming the offending field.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(std::vector<std::string> problems);
  const std::vector<std::string>& problems() const { return problems_; }

 private:
  std::vector<std::string> problems_;
};

/// Reads sections `network`, `energy`, and `algorithms`; absent keys keep
/// their defaults, unknown keys and type mismatches are reported.
ExperimentConfig parse_config(const nlohmann::json& doc);
ExperimentConfig parse_config_text(const std::string& text);
ExperimentConfig load_config(const std::filesystem::path& path);

/// Fully resolved config with every default filled in.
nlohmann::json to_json(const ExperimentConfig& cfg);

}  // namespace afsa_wsn
