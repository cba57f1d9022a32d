#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "homsim/beamsplitter.hpp"
#include "homsim/circuit.hpp"
#include "homsim/errors.hpp"
#include "homsim/experiments.hpp"
#include "homsim/gray_encoding.hpp"
#include "homsim/statevector.hpp"

namespace py = pybind11;
using namespace homsim;

namespace {

using Terms = std::vector<std::pair<Complex, std::string>>;

Terms terms_of(const PauliOp& op) {
  Terms out;
  for (const auto& t : op.terms()) out.emplace_back(t.coefficient, t.label());
  return out;
}

Interaction pick_interaction(int qubits_per_mode, bool reduced) {
  return reduced ? reduced_interaction(qubits_per_mode) : interaction(FockEncoding(qubits_per_mode));
}

ExperimentConfig config_from(const std::string& config_json) {
  ExperimentConfig c;
  if (!config_json.empty()) {
    // Missing keys keep their defaults.
    auto j = nlohmann::json(c);
    j.merge_patch(nlohmann::json::parse(config_json));
    c = j.get<ExperimentConfig>();
  }
  return c;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Gray-code beam-splitter compiler and HOM simulator";
  py::register_exception<InvariantViolation>(m, "InvariantViolation", PyExc_RuntimeError);

  m.def("gray_bits", [](int qubits_per_mode, int n) { return gray_bits(FockEncoding(qubits_per_mode), n); },
        py::arg("qubits_per_mode"), py::arg("n"));
  m.def("creation_terms", [](int w) { return terms_of(creation_op(FockEncoding(w))); }, py::arg("qubits_per_mode"));
  m.def("creation_matrix", [](int w) { return to_matrix(creation_op(FockEncoding(w))); }, py::arg("qubits_per_mode"));
  m.def("interaction_terms", [](int w, bool reduced) { return terms_of(pick_interaction(w, reduced).op); },
        py::arg("qubits_per_mode") = 2, py::arg("reduced") = false);
  m.def("exact_unitary",
        [](double theta, int w, bool reduced) { return exact_unitary(theta, pick_interaction(w, reduced)); },
        py::arg("theta"), py::arg("qubits_per_mode") = 2, py::arg("reduced") = false);
  m.def("synthesize_qasm",
        [](double theta, int steps, int w, bool reduced) {
          return export_qasm(synthesize(pick_interaction(w, reduced), theta, steps));
        },
        py::arg("theta"), py::arg("steps"), py::arg("qubits_per_mode") = 2, py::arg("reduced") = false);
  m.def("circuit_metrics",
        [](double theta, int steps, int w, bool reduced) {
          const auto mt = metrics(synthesize(pick_interaction(w, reduced), theta, steps));
          return py::dict(py::arg("depth") = mt.depth, py::arg("cx") = mt.cx_count,
                          py::arg("total_gates") = mt.total_gates, py::arg("gate_counts") = mt.gate_counts);
        },
        py::arg("theta"), py::arg("steps"), py::arg("qubits_per_mode") = 2, py::arg("reduced") = false);

  m.def("run_hom", [](const std::string& cfg) { return nlohmann::json(run_hom(config_from(cfg))).dump(); },
        py::arg("config_json") = "", "Runs one experiment; takes and returns JSON text.");
  m.def("sweep_trotter",
        [](const std::string& cfg, const std::vector<int>& steps) {
          return nlohmann::json(sweep_trotter(config_from(cfg), steps)).dump();
        },
        py::arg("config_json"), py::arg("steps_list"));
  m.def("sweep_theta",
        [](const std::string& cfg, const std::vector<double>& thetas, bool circuit_path) {
          return nlohmann::json(sweep_theta(config_from(cfg), thetas, circuit_path)).dump();
        },
        py::arg("config_json"), py::arg("thetas"), py::arg("circuit_path") = false);
  m.attr("rng_algorithm") = std::string(kRngAlgorithm);
}
