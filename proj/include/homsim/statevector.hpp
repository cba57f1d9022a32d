#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "homsim/circuit.hpp"
#include "homsim/pauli.hpp"

namespace homsim {

inline constexpr std::size_t kMaxStatevectorQubits = 24;
inline constexpr double kNormTolerance = 1e-10;

/// Name of the sampling generator, recorded in reports.
inline constexpr std::string_view kRngAlgorithm = "mt19937_64+inverse_cdf53";

/// Dense pure state. The leftmost character of a basis label is the most
/// significant bit of the amplitude index, so qubit q maps to bit (n - 1 - q).
class StateVector {
 public:
  explicit StateVector(std::size_t n_qubits);  // |0...0>

  /// Unit amplitude on `label`; throws std::invalid_argument on malformed labels.
  static StateVector basis(std::size_t n_qubits, std::string_view label);

  std::size_t n_qubits() const { return n_qubits_; }
  std::size_t dimension() const { return amplitudes_.size(); }
  const std::vector<Complex>& amplitudes() const { return amplitudes_; }
  Complex amplitude(std::string_view label) const;
  double norm_squared() const;

  void apply(const Gate& g);
  void apply(const Circuit& c);
  /// Matrix-vector product; rejects wrong dimensions and non-unitary matrices.
  void apply(const DenseMatrix& m);

 private:
  StateVector(std::size_t n_qubits, std::vector<Complex> amps)
      : n_qubits_(n_qubits), amplitudes_(std::move(amps)) {}

  std::size_t n_qubits_;
  std::vector<Complex> amplitudes_;
};

StateVector init_basis(std::size_t n_qubits, std::string_view label);
StateVector apply_gate(StateVector s, const Gate& g);
/// Throws InvariantViolation if the norm drifts by more than kNormTolerance.
StateVector apply_circuit(StateVector s, const Circuit& c);
StateVector apply_dense(StateVector s, const DenseMatrix& m);

std::string basis_label(std::size_t n_qubits, std::uint64_t index);
std::uint64_t basis_index(std::size_t n_qubits, std::string_view label);

std::vector<double> probabilities(const StateVector& s);

struct Histogram {
  std::map<std::string, std::uint64_t> counts;  // only observed labels
  std::uint64_t shots = 0;

  std::uint64_t count(const std::string& label) const;
  bool operator==(const Histogram&) const = default;
};

/// `shots` i.i.d. draws from probabilities(s) using mt19937_64 seeded with `seed`
/// and inverse-CDF lookup on 53-bit uniforms. Deterministic for fixed inputs.
Histogram sample(const StateVector& s, std::uint64_t shots, std::uint64_t seed);

/// |<a|b>|^2
double fidelity(const StateVector& a, const StateVector& b);

/// Dense unitary of a circuit, built column by column with the gate kernels.
DenseMatrix circuit_unitary(const Circuit& c);

}  // namespace homsim
