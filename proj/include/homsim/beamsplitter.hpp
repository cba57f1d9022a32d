#pragma once

#include "homsim/gray_encoding.hpp"
#include "homsim/pauli.hpp"

namespace homsim {

/// Two-mode interaction b^dag a + b a^dag. Mode B occupies qubits
/// [0, N_q) and mode A qubits [N_q, 2 N_q), so labels read (B bits)(A bits).
struct Interaction {
  PauliOp op;
  FockEncoding encoding;
  bool reduced = false;

  std::size_t width() const { return op.width(); }
};

Interaction interaction(const FockEncoding& encoding);

/// HOM-specific interaction that keeps only the hops reachable from |1,1>:
/// sqrt(2) [(P0 Q1 Q0 P1 + h.c.) + (Q1 P1 P0 Q0 + h.c.)]. Defined for the
/// two-qubit encoding only; any other qubits_per_mode is rejected.
Interaction reduced_interaction(int qubits_per_mode = 2);

/// N_B (x) I + I (x) N_A.
PauliOp total_number_op(const FockEncoding& encoding);

/// Basis label of the product Fock state |n_b>_B |n_a>_A.
std::string product_label(const FockEncoding& encoding, int n_b, int n_a);

/// exp(+i theta H) of the interaction, dense. Rejects non-Hermitian interactions,
/// non-finite theta and registers wider than kMaxDenseQubits.
DenseMatrix exact_unitary(double theta, const Interaction& inter);

}  // namespace homsim
