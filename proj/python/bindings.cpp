#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <variant>
#include <vector>

#include "afsa_wsn/config.hpp"
#include "afsa_wsn/energy.hpp"
#include "afsa_wsn/network.hpp"
#include "afsa_wsn/report.hpp"
#include "afsa_wsn/simulation.hpp"

namespace py = pybind11;
using namespace afsa_wsn;

namespace {

Algorithm to_algorithm(const std::variant<Algorithm, std::string>& a) {
  if (const auto* e = std::get_if<Algorithm>(&a)) return *e;
  const auto& name = std::get<std::string>(a);
  if (auto parsed = parse_algorithm(name)) return *parsed;
  throw py::value_error("unknown algorithm '" + name + "'; valid names: " + algorithm_names());
}

}  // namespace

PYBIND11_MODULE(afsa_wsn, m) {
  m.doc() = "Wireless sensor network lifetime simulation with swarm-based cluster-head selection";
  m.attr("__version__") = std::string(kToolVersion);

  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);

  py::class_<Position>(m, "Position")
      .def(py::init<>())
      .def(py::init<double, double>(), py::arg("x"), py::arg("y"))
      .def_readwrite("x", &Position::x)
      .def_readwrite("y", &Position::y)
      .def("__eq__", [](const Position& a, const Position& b) { return a == b; })
      .def("__repr__", [](const Position& p) {
        return "Position(" + format_number(p.x) + ", " + format_number(p.y) + ")";
      });

  py::class_<NodeState>(m, "NodeState")
      .def(py::init<>())
      .def(py::init([](int id, Position pos, double energy, bool alive) {
             return NodeState{id, pos, energy, alive};
           }),
           py::arg("id"), py::arg("pos"), py::arg("energy"), py::arg("alive") = true)
      .def_readwrite("id", &NodeState::id)
      .def_readwrite("pos", &NodeState::pos)
      .def_readwrite("energy", &NodeState::energy)
      .def_readwrite("alive", &NodeState::alive);

  py::class_<RadioConstants>(m, "RadioConstants")
      .def(py::init<>())
      .def_readwrite("e_elec", &RadioConstants::e_elec)
      .def_readwrite("e_amp", &RadioConstants::e_amp)
      .def_readwrite("e_da", &RadioConstants::e_da);

  py::class_<NetworkConfig>(m, "NetworkConfig")
      .def(py::init<>())
      .def_readwrite("field_width", &NetworkConfig::field_width)
      .def_readwrite("field_height", &NetworkConfig::field_height)
      .def_readwrite("base_station", &NetworkConfig::base_station)
      .def_readwrite("nodes_count", &NetworkConfig::nodes_count)
      .def_readwrite("packet_bits", &NetworkConfig::packet_bits)
      .def_readwrite("initial_energy", &NetworkConfig::initial_energy)
      .def_readwrite("radio", &NetworkConfig::radio)
      .def_readwrite("cluster_fraction", &NetworkConfig::cluster_fraction)
      .def_readwrite("max_rounds", &NetworkConfig::max_rounds)
      .def("violations", &NetworkConfig::violations);

  py::class_<ClusterPlan>(m, "ClusterPlan")
      .def_readonly("heads", &ClusterPlan::heads)
      .def_readonly("membership", &ClusterPlan::membership);

  m.def("euclidean_distance", &euclidean_distance, py::arg("a"), py::arg("b"));
  m.def(
      "fitness",
      [](const std::vector<double>& heads, const std::vector<NodeState>& nodes) {
        return fitness(heads, nodes);
      },
      py::arg("head_coords"), py::arg("nodes"));
  m.def(
      "assign_members",
      [](const std::vector<NodeState>& nodes, const std::vector<int>& heads) {
        return assign_members(nodes, heads);
      },
      py::arg("alive_nodes"), py::arg("heads"));
  m.def("cluster_count", &cluster_count, py::arg("alive_count"), py::arg("fraction"));
  m.def("make_nodes", &make_nodes, py::arg("config"), py::arg("seed"));

  m.def("tx_energy", &tx_energy, py::arg("bits"), py::arg("distance"),
        py::arg("radio") = RadioConstants{});
  m.def("rx_energy", &rx_energy, py::arg("bits"), py::arg("radio") = RadioConstants{});
  m.def("aggregation_energy", &aggregation_energy, py::arg("bits"), py::arg("signals"),
        py::arg("radio") = RadioConstants{});

  py::enum_<Algorithm>(m, "Algorithm")
      .value("MODIFIED_AFSA", Algorithm::kModifiedAfsa)
      .value("STANDARD_AFSA", Algorithm::kStandardAfsa)
      .value("PSO", Algorithm::kPso)
      .value("LEACH", Algorithm::kLeach);
  m.def("algorithm_name", [](Algorithm a) { return std::string(algorithm_name(a)); });
  m.def("algorithm_names", [] {
    std::vector<std::string> out;
    for (auto a : kAllAlgorithms) out.emplace_back(algorithm_name(a));
    return out;
  });

  py::class_<ExperimentConfig>(m, "ExperimentConfig")
      .def(py::init<>())
      .def_readwrite("network", &ExperimentConfig::network)
      .def("to_json", [](const ExperimentConfig& c) { return to_json(c).dump(2); });
  m.def("parse_config", &parse_config_text, py::arg("text"));
  m.def("load_config", [](const std::string& path) { return load_config(path); }, py::arg("path"));

  py::class_<RoundMetrics>(m, "RoundMetrics")
      .def_readonly("round", &RoundMetrics::round)
      .def_readonly("alive_count", &RoundMetrics::alive_count)
      .def_readonly("total_energy", &RoundMetrics::total_energy)
      .def_readonly("plan_fitness", &RoundMetrics::plan_fitness)
      .def_readonly("head_ids", &RoundMetrics::head_ids)
      .def_readonly("alive_before", &RoundMetrics::alive_before)
      .def_readonly("energy_spent", &RoundMetrics::energy_spent);

  py::class_<RunResult>(m, "RunResult")
      .def_readonly("fnd", &RunResult::fnd)
      .def_readonly("lnd", &RunResult::lnd)
      .def_readonly("rounds", &RunResult::rounds)
      .def_readonly("seed", &RunResult::seed)
      .def_readonly("initial_energy", &RunResult::initial_energy)
      .def("rounds_csv", &rounds_csv);

  py::class_<Statistic>(m, "Statistic")
      .def_readonly("mean", &Statistic::mean)
      .def_readonly("stddev", &Statistic::stddev)
      .def_readonly("samples", &Statistic::samples);

  py::class_<AlgorithmSummary>(m, "AlgorithmSummary")
      .def_property_readonly("algorithm",
                             [](const AlgorithmSummary& s) { return std::string(algorithm_name(s.algorithm)); })
      .def_readonly("fnd", &AlgorithmSummary::fnd)
      .def_readonly("lnd", &AlgorithmSummary::lnd)
      .def_readonly("energy_curve", &AlgorithmSummary::energy_curve);

  py::class_<ExperimentSummary>(m, "ExperimentSummary")
      .def_readonly("repetitions", &ExperimentSummary::repetitions)
      .def_readonly("algorithms", &ExperimentSummary::algorithms)
      .def_readonly("runs", &ExperimentSummary::runs)
      .def("summary_csv", &summary_csv)
      .def("energy_curve_csv", &energy_curve_csv);

  m.def(
      "run_simulation",
      [](const ExperimentConfig& cfg, const std::variant<Algorithm, std::string>& algorithm,
         std::uint64_t seed) {
        auto algo = to_algorithm(algorithm);
        py::gil_scoped_release release;
        return run_simulation(cfg.network, algo, cfg.algorithms, RunSeeds::from(seed));
      },
      py::arg("config"), py::arg("algorithm"), py::arg("seed") = 42);

  m.def(
      "run_experiment",
      [](const ExperimentConfig& cfg, const std::vector<std::variant<Algorithm, std::string>>& algorithms,
         int repetitions, std::uint64_t base_seed, int jobs) {
        std::vector<Algorithm> algos;
        for (const auto& a : algorithms) algos.push_back(to_algorithm(a));
        py::gil_scoped_release release;
        return run_experiment(cfg.network, algos, cfg.algorithms, repetitions, base_seed, jobs);
      },
      py::arg("config"), py::arg("algorithms"), py::arg("repetitions") = 50, py::arg("base_seed") = 42,
      py::arg("jobs") = 1);
}
