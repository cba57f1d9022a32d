#include "homsim/beamsplitter.hpp"

#include <cmath>
#include <stdexcept>

#include "homsim/dense.hpp"

namespace homsim {

Interaction interaction(const FockEncoding& encoding) {
  const PauliOp create = creation_op(encoding);
  const PauliOp destroy = annihilation_op(encoding);
  return {tensor(create, destroy) + tensor(destroy, create), encoding, false};
}

Interaction reduced_interaction(int qubits_per_mode) {
  if (qubits_per_mode != 2) {
    throw std::invalid_argument("reduced interaction is only defined for 2 qubits per mode, got " +
                                std::to_string(qubits_per_mode));
  }
  const PauliOp p0 = projector(0);
  const PauliOp p1 = projector(1);
  const PauliOp q0 = ladder(0);
  const PauliOp q1 = ladder(1);
  // |0,2> -> |1,1> and |1,1> -> |2,0>.
  const PauliOp into_11 = tensor(tensor(p0, q1), tensor(q0, p1));
  const PauliOp out_of_11 = tensor(tensor(q1, p1), tensor(p0, q0));
  const PauliOp hops = into_11 + out_of_11;
  return {scale(hops + adjoint(hops), std::sqrt(2.0)), FockEncoding(2), true};
}

PauliOp total_number_op(const FockEncoding& encoding) {
  const PauliOp n = number_op(encoding);
  const auto id = PauliOp::identity(static_cast<std::size_t>(encoding.qubits_per_mode()));
  return tensor(n, id) + tensor(id, n);
}

std::string product_label(const FockEncoding& encoding, int n_b, int n_a) {
  return gray_bits(encoding, n_b) + gray_bits(encoding, n_a);
}

DenseMatrix exact_unitary(double theta, const Interaction& inter) {
  if (!std::isfinite(theta)) throw std::invalid_argument("exact_unitary: theta must be finite");
  if (!is_hermitian(inter.op)) {
    throw std::invalid_argument("exact_unitary: interaction is not Hermitian");
  }
  return hermitian_exponential(to_matrix(inter.op), theta);
}

}  // namespace homsim
