#include "homsim/gray_encoding.hpp"

#include <cmath>
#include <stdexcept>

namespace homsim {

namespace {

void require_fock_index(const FockEncoding& enc, int n, int lowest) {
  if (n < lowest || n > enc.capacity()) {
    throw std::invalid_argument("Fock index " + std::to_string(n) + " outside [" +
                                std::to_string(lowest) + ", " + std::to_string(enc.capacity()) + "]");
  }
}

}  // namespace

FockEncoding::FockEncoding(int qubits_per_mode) : qubits_per_mode_(qubits_per_mode) {
  if (qubits_per_mode < 1 || qubits_per_mode > 16) {
    throw std::invalid_argument("qubits_per_mode must be in [1, 16], got " +
                                std::to_string(qubits_per_mode));
  }
}

std::uint32_t gray_code(const FockEncoding& enc, int n) {
  require_fock_index(enc, n, 0);
  const auto u = static_cast<std::uint32_t>(n);
  return u ^ (u >> 1);
}

std::string gray_bits(const FockEncoding& enc, int n) {
  const std::uint32_t g = gray_code(enc, n);
  const int w = enc.qubits_per_mode();
  std::string bits(static_cast<std::size_t>(w), '0');
  for (int k = 0; k < w; ++k) {
    if ((g >> (w - 1 - k)) & 1u) bits[static_cast<std::size_t>(k)] = '1';
  }
  return bits;
}

int fock_index(const FockEncoding& enc, std::uint32_t basis_index) {
  if (basis_index > static_cast<std::uint32_t>(enc.capacity())) {
    throw std::invalid_argument("basis index outside encoding");
  }
  std::uint32_t n = basis_index;
  for (std::uint32_t shift = basis_index >> 1; shift != 0; shift >>= 1) n ^= shift;
  return static_cast<int>(n);
}

PauliOp projector(int bit) {
  if (bit != 0 && bit != 1) throw std::invalid_argument("projector: bit must be 0 or 1");
  const double s = bit == 0 ? 0.5 : -0.5;
  return PauliOp::from_labels({{0.5, "I"}, {s, "Z"}});
}

PauliOp ladder(int bit) {
  if (bit != 0 && bit != 1) throw std::invalid_argument("ladder: bit must be 0 or 1");
  const Complex y = bit == 0 ? Complex{0.0, 0.5} : Complex{0.0, -0.5};
  return PauliOp::from_labels({{0.5, "X"}, {y, "Y"}});
}

PauliOp hop_term(const FockEncoding& enc, int n) {
  require_fock_index(enc, n, 1);
  const std::string from = gray_bits(enc, n - 1);
  const std::string to = gray_bits(enc, n);
  PauliOp out = PauliOp::identity(0);
  for (std::size_t k = 0; k < to.size(); ++k) {
    const int bit = to[k] - '0';
    out = tensor(out, from[k] != to[k] ? ladder(bit) : projector(bit));
  }
  return out;
}

PauliOp creation_op(const FockEncoding& enc) {
  PauliOp out(static_cast<std::size_t>(enc.qubits_per_mode()));
  for (int n = 1; n <= enc.capacity(); ++n) {
    out = out + scale(hop_term(enc, n), std::sqrt(static_cast<double>(n)));
  }
  return out;
}

PauliOp annihilation_op(const FockEncoding& enc) { return simplify(adjoint(creation_op(enc))); }

PauliOp number_op(const FockEncoding& enc) { return creation_op(enc) * annihilation_op(enc); }

}  // namespace homsim
