#include "afsa_wsn/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace afsa_wsn {

using nlohmann::json;

namespace {

std::string join(const std::vector<std::string>& lines) {
  std::string out = "invalid configuration:";
  for (const auto& l : lines) out += "\n  " + l;
  return out;
}

/// Reads one JSON object section, recording problems instead of throwing.
class SectionReader {
 public:
  SectionReader(const json& doc, std::string path, std::vector<std::string>& problems)
      : path_(std::move(path)), problems_(problems) {
    if (doc.is_null()) return;
    if (!doc.is_object()) {
      problems_.push_back(path_ + ": expected an object");
      return;
    }
    obj_ = &doc;
  }

  ~SectionReader() {
    if (!obj_) return;
    for (const auto& [key, _] : obj_->items())
      if (!seen_.count(key)) problems_.push_back(path_ + "." + key + ": unknown key");
  }

  const json* child(const std::string& key) {
    seen_.insert(key);
    if (!obj_) return nullptr;
    auto it = obj_->find(key);
    return it == obj_->end() ? nullptr : &*it;
  }

  std::string path(const std::string& key) const { return path_ + "." + key; }

  void real(const std::string& key, double& out) {
    if (const auto* v = child(key)) {
      if (v->is_number()) out = v->get<double>();
      else problems_.push_back(path(key) + ": expected a number");
    }
  }

  void integer(const std::string& key, int& out) {
    if (const auto* v = child(key)) {
      if (v->is_number_integer()) out = v->get<int>();
      else problems_.push_back(path(key) + ": expected an integer");
    }
  }

  void position(const std::string& key, Position& out) {
    const auto* v = child(key);
    if (!v) return;
    if (v->is_array() && v->size() == 2 && (*v)[0].is_number() && (*v)[1].is_number()) {
      out = {(*v)[0].get<double>(), (*v)[1].get<double>()};
      return;
    }
    SectionReader sub(*v, path(key), problems_);
    sub.real("x", out.x);
    sub.real("y", out.y);
  }

  std::vector<std::string>& problems() { return problems_; }

 private:
  const json* obj_ = nullptr;
  std::string path_;
  std::vector<std::string>& problems_;
  std::set<std::string> seen_;
};

void read_network(const json& doc, NetworkConfig& n, std::vector<std::string>& problems) {
  SectionReader r(doc, "network", problems);
  r.real("field_width", n.field_width);
  r.real("field_height", n.field_height);
  r.position("base_station", n.base_station);
  r.integer("nodes_count", n.nodes_count);
  r.integer("packet_bits", n.packet_bits);
  r.real("initial_energy", n.initial_energy);
  r.real("cluster_fraction", n.cluster_fraction);
  r.integer("max_rounds", n.max_rounds);
}

void read_energy(const json& doc, RadioConstants& rc, std::vector<std::string>& problems) {
  SectionReader r(doc, "energy", problems);
  r.real("e_elec", rc.e_elec);
  r.real("e_amp", rc.e_amp);
  r.real("e_da", rc.e_da);
}

void read_algorithms(const json& doc, AlgorithmParams& a, std::vector<std::string>& problems) {
  SectionReader r(doc, "algorithms", problems);
  const json null;
  auto section = [&](const char* key) -> const json& {
    const auto* v = r.child(key);
    return v ? *v : null;
  };
  {
    auto& p = a.modified_afsa;
    SectionReader s(section("modified_afsa"), "algorithms.modified_afsa", problems);
    s.integer("population_multiplier", p.population_multiplier);
    s.integer("try_number", p.try_number);
    s.real("v_fraction", p.v_fraction);
    s.real("s_fraction", p.s_fraction);
    s.real("p1", p.p1);
    s.real("p2", p.p2);
    s.integer("convergence_window", p.convergence_window);
    s.integer("max_iterations", p.max_iterations);
  }
  {
    auto& p = a.standard_afsa;
    SectionReader s(section("standard_afsa"), "algorithms.standard_afsa", problems);
    s.integer("population_multiplier", p.population_multiplier);
    s.real("visual", p.visual);
    s.real("step", p.step);
    s.integer("try_number", p.try_number);
    s.real("crowd_factor", p.crowd_factor);
    s.integer("max_iterations", p.max_iterations);
    s.integer("convergence_window", p.convergence_window);
  }
  {
    auto& p = a.pso;
    SectionReader s(section("pso"), "algorithms.pso", problems);
    s.integer("population_multiplier", p.population_multiplier);
    s.real("c1", p.c1);
    s.real("c2", p.c2);
    if (const auto* v = s.child("inertia")) {
      if (v->is_string() && *v == "product") p.inertia = InertiaRule::kProduct;
      else if (v->is_string() && *v == "offset") p.inertia = InertiaRule::kOffset;
      else problems.push_back("algorithms.pso.inertia: expected \"product\" or \"offset\"");
    }
    s.integer("max_iterations", p.max_iterations);
    s.integer("convergence_window", p.convergence_window);
  }
  {
    auto& p = a.leach;
    SectionReader s(section("leach"), "algorithms.leach", problems);
    s.real("head_probability", p.head_probability);
    s.integer("epoch_length", p.epoch_length);
  }
}

}  // namespace

ConfigError::ConfigError(std::vector<std::string> problems)
    : std::runtime_error(join(problems)), problems_(std::move(problems)) {}

ExperimentConfig parse_config(const json& doc) {
  ExperimentConfig cfg;
  std::vector<std::string> problems;
  {
    SectionReader root(doc, "config", problems);
    const json null;
    auto section = [&](const char* key) -> const json& {
      const auto* v = root.child(key);
      return v ? *v : null;
    };
    read_network(section("network"), cfg.network, problems);
    read_energy(section("energy"), cfg.network.radio, problems);
    read_algorithms(section("algorithms"), cfg.algorithms, problems);
  }
  if (!problems.empty()) throw ConfigError(std::move(problems));

  for (auto& v : cfg.network.violations()) problems.push_back(std::move(v));
  for (auto& v : cfg.algorithms.violations()) problems.push_back(std::move(v));
  if (!problems.empty()) throw ConfigError(std::move(problems));
  return cfg;
}

ExperimentConfig parse_config_text(const std::string& text) {
  if (text.find_first_not_of(" \t\r\n") == std::string::npos) return parse_config(json::object());
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError({std::string("config: malformed JSON: ") + e.what()});
  }
  return parse_config(doc);
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError({"cannot read config file '" + path.string() + "'"});
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config_text(text.str());
}

json to_json(const ExperimentConfig& cfg) {
  const auto& n = cfg.network;
  const auto& a = cfg.algorithms;
  return {
      {"network",
       {{"field_width", n.field_width},
        {"field_height", n.field_height},
        {"base_station", {{"x", n.base_station.x}, {"y", n.base_station.y}}},
        {"nodes_count", n.nodes_count},
        {"packet_bits", n.packet_bits},
        {"initial_energy", n.initial_energy},
        {"cluster_fraction", n.cluster_fraction},
        {"max_rounds", n.max_rounds}}},
      {"energy", {{"e_elec", n.radio.e_elec}, {"e_amp", n.radio.e_amp}, {"e_da", n.radio.e_da}}},
      {"algorithms",
       {{"modified_afsa",
         {{"population_multiplier", a.modified_afsa.population_multiplier},
          {"try_number", a.modified_afsa.try_number},
          {"v_fraction", a.modified_afsa.v_fraction},
          {"s_fraction", a.modified_afsa.s_fraction},
          {"p1", a.modified_afsa.p1},
          {"p2", a.modified_afsa.p2},
          {"convergence_window", a.modified_afsa.convergence_window},
          {"max_iterations", a.modified_afsa.max_iterations}}},
        {"standard_afsa",
         {{"population_multiplier", a.standard_afsa.population_multiplier},
          {"visual", a.standard_afsa.visual},
          {"step", a.standard_afsa.step},
          {"try_number", a.standard_afsa.try_number},
          {"crowd_factor", a.standard_afsa.crowd_factor},
          {"max_iterations", a.standard_afsa.max_iterations},
          {"convergence_window", a.standard_afsa.convergence_window}}},
        {"pso",
         {{"population_multiplier", a.pso.population_multiplier},
          {"c1", a.pso.c1},
          {"c2", a.pso.c2},
          {"inertia", a.pso.inertia == InertiaRule::kProduct ? "product" : "offset"},
          {"max_iterations", a.pso.max_iterations},
          {"convergence_window", a.pso.convergence_window}}},
        {"leach",
         {{"head_probability", a.leach.head_probability},
          {"epoch_length", a.leach.epoch_length}}}}}};
}

}  // namespace afsa_wsn
