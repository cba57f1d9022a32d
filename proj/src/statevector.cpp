#include "homsim/statevector.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <numbers>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

#include "homsim/dense.hpp"
#include "homsim/errors.hpp"

namespace homsim {

namespace {

void check_norm(const StateVector& s, const char* where) {
  const double drift = std::abs(s.norm_squared() - 1.0);
  if (drift > kNormTolerance) {
    std::ostringstream msg;
    msg << where << ": norm drift " << drift << " exceeds " << kNormTolerance;
    throw InvariantViolation(msg.str());
  }
}

// Applies the 2x2 matrix [[a, b], [c, d]] to the qubit whose index bit is `mask`.
void apply_single(std::vector<Complex>& amps, std::uint64_t mask, Complex a, Complex b, Complex c,
                  Complex d) {
  for (std::uint64_t i = 0; i < amps.size(); ++i) {
    if (i & mask) continue;
    const Complex lo = amps[i];
    const Complex hi = amps[i | mask];
    amps[i] = a * lo + b * hi;
    amps[i | mask] = c * lo + d * hi;
  }
}

}  // namespace

StateVector::StateVector(std::size_t n_qubits) : n_qubits_(n_qubits) {
  if (n_qubits > kMaxStatevectorQubits) {
    throw std::invalid_argument("statevector capped at " + std::to_string(kMaxStatevectorQubits) +
                                " qubits");
  }
  amplitudes_.assign(std::size_t{1} << n_qubits, Complex{0.0, 0.0});
  amplitudes_[0] = 1.0;
}

StateVector StateVector::basis(std::size_t n_qubits, std::string_view label) {
  StateVector s(n_qubits);
  const auto idx = basis_index(n_qubits, label);
  s.amplitudes_[0] = 0.0;
  s.amplitudes_[idx] = 1.0;
  return s;
}

Complex StateVector::amplitude(std::string_view label) const {
  return amplitudes_[basis_index(n_qubits_, label)];
}

double StateVector::norm_squared() const {
  double total = 0.0;
  for (const auto& a : amplitudes_) total += std::norm(a);
  return total;
}

void StateVector::apply(const Gate& g) {
  if (g.target >= n_qubits_ || (g.control && *g.control >= n_qubits_)) {
    throw std::invalid_argument("apply_gate: qubit index out of range");
  }
  const std::uint64_t tmask = std::uint64_t{1} << (n_qubits_ - 1 - g.target);
  const Complex i{0.0, 1.0};
  switch (g.kind) {
    case GateKind::X:
      for (std::uint64_t k = 0; k < amplitudes_.size(); ++k) {
        if (!(k & tmask)) std::swap(amplitudes_[k], amplitudes_[k | tmask]);
      }
      break;
    case GateKind::H: {
      const double r = 1.0 / std::numbers::sqrt2;
      apply_single(amplitudes_, tmask, r, r, r, -r);
      break;
    }
    case GateKind::RX: {
      const double c = std::cos(g.angle / 2);
      const double s = std::sin(g.angle / 2);
      apply_single(amplitudes_, tmask, c, -i * s, -i * s, c);
      break;
    }
    case GateKind::RZ: {
      const Complex lo = std::polar(1.0, -g.angle / 2);
      const Complex hi = std::polar(1.0, g.angle / 2);
      apply_single(amplitudes_, tmask, lo, 0.0, 0.0, hi);
      break;
    }
    case GateKind::CNOT: {
      if (!g.control || *g.control == g.target) {
        throw std::invalid_argument("apply_gate: malformed CNOT");
      }
      const std::uint64_t cmask = std::uint64_t{1} << (n_qubits_ - 1 - *g.control);
      for (std::uint64_t k = 0; k < amplitudes_.size(); ++k) {
        if ((k & cmask) && !(k & tmask)) std::swap(amplitudes_[k], amplitudes_[k | tmask]);
      }
      break;
    }
  }
}

void StateVector::apply(const Circuit& c) {
  if (c.n_qubits() != n_qubits_) throw std::invalid_argument("apply_circuit: register width mismatch");
  for (const auto& g : c.gates()) apply(g);
  check_norm(*this, "apply_circuit");
}

void StateVector::apply(const DenseMatrix& m) {
  const auto dim = static_cast<Eigen::Index>(amplitudes_.size());
  if (m.rows() != dim || m.cols() != dim) throw std::invalid_argument("apply_dense: dimension mismatch");
  if (!is_unitary(m, kNormTolerance)) throw std::invalid_argument("apply_dense: matrix is not unitary");
  Eigen::Map<const Eigen::VectorXcd> in(amplitudes_.data(), dim);
  const Eigen::VectorXcd out = m * in;
  std::copy(out.data(), out.data() + dim, amplitudes_.begin());
  check_norm(*this, "apply_dense");
}

StateVector init_basis(std::size_t n_qubits, std::string_view label) {
  return StateVector::basis(n_qubits, label);
}

StateVector apply_gate(StateVector s, const Gate& g) {
  s.apply(g);
  return s;
}

StateVector apply_circuit(StateVector s, const Circuit& c) {
  s.apply(c);
  return s;
}

StateVector apply_dense(StateVector s, const DenseMatrix& m) {
  s.apply(m);
  return s;
}

std::string basis_label(std::size_t n_qubits, std::uint64_t index) {
  std::string label(n_qubits, '0');
  for (std::size_t q = 0; q < n_qubits; ++q) {
    if ((index >> (n_qubits - 1 - q)) & 1u) label[q] = '1';
  }
  return label;
}

std::uint64_t basis_index(std::size_t n_qubits, std::string_view label) {
  if (label.size() != n_qubits) {
    throw std::invalid_argument("basis label '" + std::string(label) + "' does not have " +
                                std::to_string(n_qubits) + " characters");
  }
  std::uint64_t idx = 0;
  for (char ch : label) {
    if (ch != '0' && ch != '1') {
      throw std::invalid_argument("basis label '" + std::string(label) + "' must contain only 0/1");
    }
    idx = (idx << 1) | static_cast<std::uint64_t>(ch - '0');
  }
  return idx;
}

std::vector<double> probabilities(const StateVector& s) {
  std::vector<double> p(s.dimension());
  std::transform(s.amplitudes().begin(), s.amplitudes().end(), p.begin(),
                 [](Complex a) { return std::norm(a); });
  return p;
}

std::uint64_t Histogram::count(const std::string& label) const {
  const auto it = counts.find(label);
  return it == counts.end() ? 0 : it->second;
}

Histogram sample(const StateVector& s, std::uint64_t shots, std::uint64_t seed) {
  if (shots == 0) throw std::invalid_argument("sample: shots must be >= 1");
  const auto p = probabilities(s);
  std::vector<double> cdf(p.size());
  std::partial_sum(p.begin(), p.end(), cdf.begin());
  const double total = cdf.back();

  std::mt19937_64 engine(seed);
  std::vector<std::uint64_t> tally(p.size(), 0);
  for (std::uint64_t k = 0; k < shots; ++k) {
    const double u = static_cast<double>(engine() >> 11) * 0x1.0p-53 * total;
    auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    // Zero-probability outcomes have cdf equal to their predecessor and are never selected.
    if (it == cdf.end()) it = std::prev(cdf.end());
    ++tally[static_cast<std::size_t>(it - cdf.begin())];
  }

  Histogram h;
  h.shots = shots;
  for (std::size_t idx = 0; idx < tally.size(); ++idx) {
    if (tally[idx] > 0) h.counts[basis_label(s.n_qubits(), idx)] = tally[idx];
  }
  return h;
}

double fidelity(const StateVector& a, const StateVector& b) {
  if (a.n_qubits() != b.n_qubits()) throw std::invalid_argument("fidelity: register width mismatch");
  Complex overlap{0.0, 0.0};
  for (std::size_t k = 0; k < a.dimension(); ++k) {
    overlap += std::conj(a.amplitudes()[k]) * b.amplitudes()[k];
  }
  return std::min(1.0, std::norm(overlap));
}

DenseMatrix circuit_unitary(const Circuit& c) {
  if (c.n_qubits() > kMaxDenseQubits) throw std::invalid_argument("circuit_unitary: register too wide");
  const auto dim = std::size_t{1} << c.n_qubits();
  DenseMatrix u(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (std::size_t col = 0; col < dim; ++col) {
    StateVector s = StateVector::basis(c.n_qubits(), basis_label(c.n_qubits(), col));
    for (const auto& g : c.gates()) s.apply(g);
    for (std::size_t row = 0; row < dim; ++row) {
      u(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) = s.amplitudes()[row];
    }
  }
  return u;
}

}  // namespace homsim
