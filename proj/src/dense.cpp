#include "homsim/dense.hpp"

#include <cmath>
#include <stdexcept>

namespace homsim {

DenseMatrix hermitian_exponential(const DenseMatrix& h, double t) {
  if (h.rows() != h.cols()) throw std::invalid_argument("hermitian_exponential: matrix not square");
  if (max_abs_diff(h, h.adjoint()) > 1e-12) {
    throw std::invalid_argument("hermitian_exponential: matrix is not Hermitian");
  }
  Eigen::SelfAdjointEigenSolver<DenseMatrix> solver(h);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("hermitian_exponential: eigendecomposition failed");
  }
  const Eigen::VectorXd& evals = solver.eigenvalues();
  Eigen::VectorXcd phases(evals.size());
  for (Eigen::Index k = 0; k < evals.size(); ++k) phases(k) = std::polar(1.0, t * evals(k));
  const DenseMatrix& v = solver.eigenvectors();
  return v * phases.asDiagonal() * v.adjoint();
}

double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("max_abs_diff: dimension mismatch");
  }
  if (a.size() == 0) return 0.0;
  return (a - b).cwiseAbs().maxCoeff();
}

double phase_aligned_max_diff(const DenseMatrix& a, const DenseMatrix& b) {
  const Complex overlap = (b.adjoint() * a).trace();
  const Complex phase = std::abs(overlap) > 0.0 ? overlap / std::abs(overlap) : Complex{1.0, 0.0};
  return max_abs_diff(a, phase * b);
}

double unitary_overlap(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("unitary_overlap: dimension mismatch");
  }
  return std::abs((a.adjoint() * b).trace()) / static_cast<double>(a.rows());
}

bool is_unitary(const DenseMatrix& u, double tol) {
  if (u.rows() != u.cols()) return false;
  return max_abs_diff(u * u.adjoint(), DenseMatrix::Identity(u.rows(), u.cols())) <= tol;
}

}  // namespace homsim
