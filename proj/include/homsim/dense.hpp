#pragma once

#include "homsim/pauli.hpp"

namespace homsim {

/// exp(i * t * H) for Hermitian H via eigendecomposition.
/// Throws std::invalid_argument if H is not square or not Hermitian within 1e-12.
DenseMatrix hermitian_exponential(const DenseMatrix& h, double t);

/// Largest elementwise modulus of a - b.
double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b);

/// min over global phases phi of max_abs_diff(a, e^{i phi} b), with phi taken from tr(b^H a).
double phase_aligned_max_diff(const DenseMatrix& a, const DenseMatrix& b);

/// |tr(a^H b)| / dim, equal to 1 iff a and b agree up to a global phase (for unitaries).
double unitary_overlap(const DenseMatrix& a, const DenseMatrix& b);

bool is_unitary(const DenseMatrix& u, double tol = 1e-10);

}  // namespace homsim
