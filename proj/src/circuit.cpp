#include "homsim/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <iostream>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace homsim {

namespace {

void require_hermitian_steps(const PauliOp& h, int steps) {
  if (steps < 1) throw std::invalid_argument("trotter steps must be >= 1, got " + std::to_string(steps));
  if (!is_hermitian(h)) throw std::invalid_argument("trotter_sequence: Hamiltonian is not Hermitian");
}

}  // namespace

std::string gate_name(GateKind kind) {
  switch (kind) {
    case GateKind::X: return "x";
    case GateKind::H: return "h";
    case GateKind::RX: return "rx";
    case GateKind::RZ: return "rz";
    case GateKind::CNOT: return "cx";
  }
  return "?";
}

Circuit& Circuit::add(const Gate& g) {
  if (g.target >= n_qubits_) {
    throw std::invalid_argument("gate target " + std::to_string(g.target) + " out of range for " +
                                std::to_string(n_qubits_) + " qubits");
  }
  if (g.kind == GateKind::CNOT) {
    if (!g.control) throw std::invalid_argument("CNOT requires a control qubit");
    if (*g.control >= n_qubits_) throw std::invalid_argument("CNOT control out of range");
    if (*g.control == g.target) throw std::invalid_argument("CNOT control equals target");
  } else if (g.control) {
    throw std::invalid_argument(gate_name(g.kind) + " does not take a control qubit");
  }
  if (!std::isfinite(g.angle)) throw std::invalid_argument("gate angle must be finite");
  gates_.push_back(g);
  return *this;
}

Circuit& Circuit::append(const Circuit& other) {
  if (other.n_qubits_ != n_qubits_) throw std::invalid_argument("append: register width mismatch");
  gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
  return *this;
}

std::vector<TrotterEntry> trotter_sequence(const PauliOp& hamiltonian, double theta, int steps) {
  require_hermitian_steps(hamiltonian, steps);
  const PauliOp h = simplify(hamiltonian);
  std::vector<TrotterEntry> step;
  for (const auto& t : h.terms()) {
    if (std::abs(t.coefficient.imag()) > kDropTolerance) {
      throw std::logic_error("trotter_sequence: non-real coefficient on " + t.label() +
                             " after Hermitian check");
    }
    if (t.is_identity()) {
      std::clog << "trotter: skipping identity term " << t.label() << " (global phase only)\n";
      continue;
    }
    step.push_back({PauliTerm(1.0, t.axes), theta * t.coefficient.real() / steps});
  }
  std::vector<TrotterEntry> out;
  out.reserve(step.size() * static_cast<std::size_t>(steps));
  for (int s = 0; s < steps; ++s) out.insert(out.end(), step.begin(), step.end());
  return out;
}

std::vector<TrotterEntry> trotter_sequence(const Interaction& inter, double theta, int steps) {
  return trotter_sequence(inter.op, theta, steps);
}

Circuit rotation_circuit(const PauliTerm& pauli, double alpha) {
  std::vector<std::size_t> active;
  for (std::size_t q = 0; q < pauli.width(); ++q) {
    if (pauli.axes[q] != PauliAxis::I) active.push_back(q);
  }
  if (active.empty()) throw std::invalid_argument("rotation_circuit: all-identity Pauli string");

  Circuit c(pauli.width());
  constexpr double kHalfPi = std::numbers::pi / 2;
  if (active.size() == 1 && pauli.axes[active[0]] == PauliAxis::X) {
    c.add(Gate::rx(active[0], 2 * alpha));
    return c;
  }

  for (auto q : active) {
    if (pauli.axes[q] == PauliAxis::X) c.add(Gate::h(q));
    if (pauli.axes[q] == PauliAxis::Y) c.add(Gate::rx(q, kHalfPi));
  }
  for (std::size_t k = 0; k + 1 < active.size(); ++k) c.add(Gate::cnot(active[k], active[k + 1]));
  c.add(Gate::rz(active.back(), 2 * alpha));
  for (std::size_t k = active.size() - 1; k > 0; --k) c.add(Gate::cnot(active[k - 1], active[k]));
  for (auto q : active) {
    if (pauli.axes[q] == PauliAxis::X) c.add(Gate::h(q));
    if (pauli.axes[q] == PauliAxis::Y) c.add(Gate::rx(q, -kHalfPi));
  }
  return c;
}

Circuit synthesize(const PauliOp& hamiltonian, double theta, int steps) {
  Circuit c(hamiltonian.width());
  // exp(+i a P) = exp(-i (-a) P)
  for (const auto& e : trotter_sequence(hamiltonian, theta, steps)) {
    c.append(rotation_circuit(e.pauli, -e.angle));
  }
  return c;
}

Circuit synthesize(const Interaction& inter, double theta, int steps) {
  return synthesize(inter.op, theta, steps);
}

CircuitMetrics metrics(const Circuit& c) {
  CircuitMetrics m;
  std::vector<std::size_t> frontier(c.n_qubits(), 0);
  for (const auto& g : c.gates()) {
    std::size_t layer = frontier[g.target];
    if (g.control) layer = std::max(layer, frontier[*g.control]);
    ++layer;
    frontier[g.target] = layer;
    if (g.control) frontier[*g.control] = layer;
    m.depth = std::max(m.depth, layer);
    ++m.gate_counts[gate_name(g.kind)];
    if (g.kind == GateKind::CNOT) ++m.cx_count;
  }
  m.total_gates = c.size();
  return m;
}

std::string export_qasm(const Circuit& c) {
  std::ostringstream os;
  os << std::setprecision(15);
  os << "OPENQASM 2.0;\n";
  os << "include \"qelib1.inc\";\n";
  os << "qreg q[" << c.n_qubits() << "];\n";
  for (const auto& g : c.gates()) {
    switch (g.kind) {
      case GateKind::X:
      case GateKind::H:
        os << gate_name(g.kind) << " q[" << g.target << "];\n";
        break;
      case GateKind::RX:
      case GateKind::RZ:
        os << gate_name(g.kind) << "(" << g.angle << ") q[" << g.target << "];\n";
        break;
      case GateKind::CNOT:
        os << "cx q[" << *g.control << "],q[" << g.target << "];\n";
        break;
    }
  }
  return os.str();
}

}  // namespace homsim
