#pragma once

#include <cstdint>
#include <string>

#include "homsim/pauli.hpp"

namespace homsim {

/// Truncated single-mode Fock space stored in `qubits_per_mode` qubits using
/// the binary-reflected Gray code. Capacity is always 2^qubits_per_mode - 1.
class FockEncoding {
 public:
  /// Throws std::invalid_argument unless 1 <= qubits_per_mode <= 16.
  explicit FockEncoding(int qubits_per_mode);

  int qubits_per_mode() const { return qubits_per_mode_; }
  int capacity() const { return (1 << qubits_per_mode_) - 1; }

  bool operator==(const FockEncoding&) const = default;

 private:
  int qubits_per_mode_;
};

/// Gray code of Fock index n as an integer (n XOR n>>1).
std::uint32_t gray_code(const FockEncoding& enc, int n);

/// Gray code of n as a bitstring, g1 leftmost. Throws if n is outside [0, capacity].
std::string gray_bits(const FockEncoding& enc, int n);

/// Inverse of gray_code: the Fock index stored in a computational basis index.
int fock_index(const FockEncoding& enc, std::uint32_t basis_index);

/// (I+Z)/2 for bit 0, (I-Z)/2 for bit 1.
PauliOp projector(int bit);
/// (X+iY)/2 = |0><1| for bit 0, (X-iY)/2 = |1><0| for bit 1.
PauliOp ladder(int bit);

/// Single-step creation operator taking |n-1>_F to |n>_F. Requires 1 <= n <= capacity.
PauliOp hop_term(const FockEncoding& enc, int n);

/// sum_{n=1}^{N} sqrt(n) * hop_term(n), simplified.
PauliOp creation_op(const FockEncoding& enc);
PauliOp annihilation_op(const FockEncoding& enc);
/// creation_op * annihilation_op; diag(0..N) in Fock order.
PauliOp number_op(const FockEncoding& enc);

}  // namespace homsim
