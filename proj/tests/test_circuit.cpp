#include "homsim/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "gtest/gtest.h"
#include "homsim/dense.hpp"
#include "homsim/statevector.hpp"
#include "oracles.hpp"

using namespace homsim;

namespace {

constexpr double kPi = std::numbers::pi;

std::size_t line_count(const std::string& s) {
  return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n'));
}

}  // namespace

TEST(circuit, validates_gates) {
  Circuit c(2);
  EXPECT_THROW(c.add(Gate::x(2)), std::invalid_argument);
  EXPECT_THROW(c.add(Gate::cnot(1, 1)), std::invalid_argument);
  EXPECT_THROW(c.add(Gate::cnot(2, 0)), std::invalid_argument);
  EXPECT_THROW(c.add(Gate::rz(0, std::nan(""))), std::invalid_argument);
  EXPECT_NO_THROW(c.add(Gate::cnot(0, 1)));
  EXPECT_THROW(c.append(Circuit(3)), std::invalid_argument);
}

TEST(trotter_sequence, single_term) {
  const auto seq = trotter_sequence(PauliOp::from_labels({{0.7, "XX"}}), 0.3, 1);
  ASSERT_EQ(seq.size(), 1u);
  EXPECT_EQ(seq[0].pauli.label(), "XX");
  EXPECT_DOUBLE_EQ(seq[0].angle, 0.3 * 0.7);
}

TEST(trotter_sequence, repeats_canonical_term_list) {
  const auto inter = interaction(FockEncoding(2));
  const auto seq = trotter_sequence(inter, kPi / 4, 5);
  ASSERT_EQ(seq.size(), 5 * inter.op.size());
  for (std::size_t k = 0; k < seq.size(); ++k) {
    const auto& term = inter.op.terms()[k % inter.op.size()];
    EXPECT_EQ(seq[k].pauli.label(), term.label());
    EXPECT_DOUBLE_EQ(seq[k].angle, kPi / 4 * term.coefficient.real() / 5);
  }
}

TEST(trotter_sequence, skips_identity_and_rejects_bad_input) {
  const auto seq = trotter_sequence(PauliOp::from_labels({{2.0, "II"}, {1.0, "ZZ"}}), 1.0, 2);
  ASSERT_EQ(seq.size(), 2u);
  EXPECT_EQ(seq[0].pauli.label(), "ZZ");
  EXPECT_THROW(trotter_sequence(PauliOp::from_labels({{Complex(0, 1), "X"}}), 1.0, 1), std::invalid_argument);
  EXPECT_THROW(trotter_sequence(PauliOp::from_labels({{1.0, "X"}}), 1.0, 0), std::invalid_argument);
}

TEST(rotation_circuit, single_x_is_one_rx) {
  const auto c = rotation_circuit(PauliTerm::from_label("X"), 0.4);
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c.gates()[0], Gate::rx(0, 0.8));
}

TEST(rotation_circuit, xy_structure) {
  const double a = 0.37;
  const auto c = rotation_circuit(PauliTerm::from_label("XY"), a);
  const std::vector<Gate> expected{Gate::h(0),       Gate::rx(1, kPi / 2), Gate::cnot(0, 1), Gate::rz(1, 2 * a),
                                   Gate::cnot(0, 1), Gate::h(0),           Gate::rx(1, -kPi / 2)};
  EXPECT_EQ(c.gates(), expected);
}

TEST(rotation_circuit, ladder_skips_identity_qubits) {
  const auto c = rotation_circuit(PauliTerm::from_label("XIZY"), 0.2);
  std::vector<std::pair<std::size_t, std::size_t>> cnots;
  for (const auto& g : c.gates()) {
    EXPECT_NE(g.target, 1u);
    if (g.control) EXPECT_NE(*g.control, 1u);
    if (g.kind == GateKind::CNOT) cnots.emplace_back(*g.control, g.target);
  }
  const std::vector<std::pair<std::size_t, std::size_t>> expected{{0, 2}, {2, 3}, {2, 3}, {0, 2}};
  EXPECT_EQ(cnots, expected);
}

TEST(rotation_circuit, rejects_identity) {
  EXPECT_THROW(rotation_circuit(PauliTerm::from_label("II"), 0.1), std::invalid_argument);
}

TEST(rotation_circuit, implements_pauli_exponential) {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> angle(-kPi, kPi);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t w = 1 + trial % 4;
    const auto p = oracle::random_nonidentity_term(rng, w);
    const double alpha = angle(rng);
    const PauliTerm unit(1.0, p.axes);
    const DenseMatrix target = oracle::taylor_exp_i(to_matrix(unit), -alpha);
    const DenseMatrix got = circuit_unitary(rotation_circuit(p, alpha));
    EXPECT_GE(unitary_overlap(target, got), 1 - 1e-10) << p.label() << " " << alpha;
    // The construction carries no global phase.
    EXPECT_LE(max_abs_diff(target, got), 1e-12) << p.label();
  }
}

TEST(synthesize, zero_angle_is_identity) {
  const auto c = synthesize(interaction(FockEncoding(2)), 0.0, 3);
  EXPECT_GE(unitary_overlap(circuit_unitary(c), DenseMatrix::Identity(16, 16)), 1 - 1e-12);
}

TEST(synthesize, one_step_equals_ordered_term_exponentials) {
  const auto inter = interaction(FockEncoding(2));
  const double theta = kPi / 4;
  DenseMatrix product = DenseMatrix::Identity(16, 16);
  for (const auto& t : inter.op.terms()) {
    product = oracle::taylor_exp_i(to_matrix(PauliTerm(1.0, t.axes)), theta * t.coefficient.real()) * product;
  }
  EXPECT_LE(phase_aligned_max_diff(circuit_unitary(synthesize(inter, theta, 1)), product), 1e-10);
}

TEST(synthesize, fidelity_improves_on_doubling_ladder) {
  const auto inter = interaction(FockEncoding(2));
  const auto exact = exact_unitary(kPi / 4, inter);
  double previous = -1.0;
  for (int steps : {1, 2, 4, 8, 16}) {
    const double f = unitary_overlap(exact, circuit_unitary(synthesize(inter, kPi / 4, steps)));
    EXPECT_GT(f, previous) << steps;
    previous = f;
  }
}

TEST(synthesize, first_order_error_scaling) {
  const auto inter = interaction(FockEncoding(2));
  const auto exact = exact_unitary(kPi / 4, inter);
  auto error = [&](int n) {
    return phase_aligned_max_diff(circuit_unitary(synthesize(inter, kPi / 4, n)), exact);
  };
  for (int n : {2, 4, 8}) {
    const double ratio = error(2 * n) / error(n);
    EXPECT_GE(ratio, 0.4) << n;
    EXPECT_LE(ratio, 0.6) << n;
  }
}

TEST(synthesize, is_deterministic) {
  const auto inter = interaction(FockEncoding(2));
  EXPECT_EQ(export_qasm(synthesize(inter, 0.9, 2)), export_qasm(synthesize(inter, 0.9, 2)));
}

TEST(metrics, single_gate) {
  Circuit c(1);
  c.add(Gate::x(0));
  const auto m = metrics(c);
  EXPECT_EQ(m.depth, 1u);
  EXPECT_EQ(m.cx_count, 0u);
  EXPECT_EQ(m.total_gates, 1u);
  EXPECT_EQ(m.gate_counts.at("x"), 1u);
}

TEST(metrics, parallel_gates_share_a_layer) {
  Circuit c(3);
  c.add(Gate::h(0)).add(Gate::h(1)).add(Gate::h(2)).add(Gate::cnot(0, 1)).add(Gate::x(2));
  EXPECT_EQ(metrics(c).depth, 2u);
}

TEST(metrics, rotation_and_hom_circuits) {
  EXPECT_EQ(metrics(rotation_circuit(PauliTerm::from_label("XY"), 0.1)).cx_count, 2u);

  const auto c = synthesize(interaction(FockEncoding(2)), kPi / 4, 1);
  const auto m = metrics(c);
  EXPECT_EQ(m.cx_count, 128u);
  EXPECT_EQ(m, metrics(c));
  EXPECT_GE(m.depth, (m.total_gates + c.n_qubits() - 1) / c.n_qubits());
  std::size_t summed = 0;
  for (const auto& [name, n] : m.gate_counts) summed += n;
  EXPECT_EQ(summed, m.total_gates);
}

TEST(export_qasm, format) {
  Circuit one(1);
  one.add(Gate::x(0));
  const auto text = export_qasm(one);
  EXPECT_EQ(text, "OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[1];\nx q[0];\n");

  EXPECT_EQ(line_count(export_qasm(Circuit(2))), kQasmHeaderLines);

  Circuit rot(2);
  rot.add(Gate::rz(1, kPi / 3)).add(Gate::cnot(0, 1)).add(Gate::rx(0, -0.5)).add(Gate::h(1));
  EXPECT_EQ(export_qasm(rot),
            "OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[2];\nrz(1.0471975511966) q[1];\ncx q[0],q[1];\n"
            "rx(-0.5) q[0];\nh q[1];\n");

  const auto hom = synthesize(interaction(FockEncoding(2)), kPi / 4, 1);
  EXPECT_EQ(line_count(export_qasm(hom)), hom.size() + kQasmHeaderLines);
}
