#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "homsim/beamsplitter.hpp"
#include "homsim/pauli.hpp"

namespace homsim {

enum class GateKind { X, H, RX, RZ, CNOT };

std::string gate_name(GateKind kind);

/// Rotation gates follow the half-angle convention RX(a) = exp(-i a X / 2),
/// RZ(a) = exp(-i a Z / 2).
struct Gate {
  GateKind kind = GateKind::X;
  std::size_t target = 0;
  std::optional<std::size_t> control;  // CNOT only
  double angle = 0.0;                  // RX and RZ only

  static Gate x(std::size_t q) { return {GateKind::X, q, std::nullopt, 0.0}; }
  static Gate h(std::size_t q) { return {GateKind::H, q, std::nullopt, 0.0}; }
  static Gate rx(std::size_t q, double a) { return {GateKind::RX, q, std::nullopt, a}; }
  static Gate rz(std::size_t q, double a) { return {GateKind::RZ, q, std::nullopt, a}; }
  static Gate cnot(std::size_t c, std::size_t t) { return {GateKind::CNOT, t, c, 0.0}; }

  bool operator==(const Gate&) const = default;
};

class Circuit {
 public:
  explicit Circuit(std::size_t n_qubits = 0) : n_qubits_(n_qubits) {}

  /// Validates indices, control != target and finite angles; throws std::invalid_argument.
  Circuit& add(const Gate& g);
  /// Appends every gate of `other`, which must have the same width.
  Circuit& append(const Circuit& other);

  std::size_t n_qubits() const { return n_qubits_; }
  const std::vector<Gate>& gates() const { return gates_; }
  std::size_t size() const { return gates_.size(); }

  bool operator==(const Circuit&) const = default;

 private:
  std::size_t n_qubits_;
  std::vector<Gate> gates_;
};

/// One factor exp(+i * angle * pauli) of a product formula; `pauli` has unit coefficient.
struct TrotterEntry {
  PauliTerm pauli;
  double angle = 0.0;
};

/// First-order product formula for exp(+i theta H): the simplified terms of H
/// in canonical order, each with angle theta * c / steps, repeated `steps` times.
/// Identity strings only contribute a global phase and are skipped.
std::vector<TrotterEntry> trotter_sequence(const Interaction& inter, double theta, int steps);
std::vector<TrotterEntry> trotter_sequence(const PauliOp& hamiltonian, double theta, int steps);

/// Circuit for exp(-i alpha P) using basis changes, an ascending CNOT ladder over
/// the active qubits and RZ(2 alpha) on the last active qubit. The coefficient of
/// `pauli` is ignored. Rejects all-identity strings.
Circuit rotation_circuit(const PauliTerm& pauli, double alpha);

/// Circuit whose unitary is the first-order approximant of exp(+i theta H).
Circuit synthesize(const Interaction& inter, double theta, int steps);
Circuit synthesize(const PauliOp& hamiltonian, double theta, int steps);

struct CircuitMetrics {
  std::size_t depth = 0;
  std::size_t cx_count = 0;
  std::size_t total_gates = 0;
  std::map<std::string, std::size_t> gate_counts;  // keyed by QASM gate name

  bool operator==(const CircuitMetrics&) const = default;
};

/// ASAP layering: each gate lands one layer after the latest gate on any of its qubits.
CircuitMetrics metrics(const Circuit& c);

/// OpenQASM 2.0 text; angles printed with 15 significant digits.
std::string export_qasm(const Circuit& c);

/// Number of header lines export_qasm emits before the first gate.
inline constexpr std::size_t kQasmHeaderLines = 3;

}  // namespace homsim
