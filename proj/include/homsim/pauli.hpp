#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace homsim {

using Complex = std::complex<double>;
using DenseMatrix = Eigen::MatrixXcd;

/// Coefficients at or below this magnitude are dropped by simplify().
inline constexpr double kDropTolerance = 1e-12;

/// Largest register that may be realized as a dense matrix (4096 x 4096).
inline constexpr std::size_t kMaxDenseQubits = 12;

enum class PauliAxis : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

char axis_char(PauliAxis a);
PauliAxis axis_from_char(char c);

/// Power of i in {0, 1, 2, 3}, i.e. a phase in {+1, +i, -1, -i}.
struct Phase {
  std::uint8_t power = 0;

  Phase& operator*=(Phase other) {
    power = static_cast<std::uint8_t>((power + other.power) & 3u);
    return *this;
  }
  Complex value() const;
};

/// Single-qubit product a*b = phase * result.
struct AxisProduct {
  PauliAxis axis;
  Phase phase;
};
AxisProduct multiply_axes(PauliAxis a, PauliAxis b);

/// A weighted tensor product of single-qubit Paulis. Index 0 is the leftmost
/// character of the label and the most significant factor of the Kronecker
/// product.
struct PauliTerm {
  Complex coefficient{1.0, 0.0};
  std::vector<PauliAxis> axes;

  PauliTerm() = default;
  PauliTerm(Complex c, std::vector<PauliAxis> a) : coefficient(c), axes(std::move(a)) {}

  /// Parses a label such as "XIZY"; throws std::invalid_argument on other characters.
  static PauliTerm from_label(std::string_view label, Complex coefficient = 1.0);

  std::size_t width() const { return axes.size(); }
  std::string label() const;
  bool is_identity() const;
  /// Number of non-identity axes.
  std::size_t weight() const;

  bool operator==(const PauliTerm&) const = default;
};

/// Product with exact phase tracking. Throws std::invalid_argument on width mismatch.
PauliTerm multiply(const PauliTerm& a, const PauliTerm& b);

/// Complex-weighted sum of Pauli strings over a fixed register width.
class PauliOp {
 public:
  explicit PauliOp(std::size_t width = 0) : width_(width) {}
  PauliOp(std::size_t width, std::vector<PauliTerm> terms);
  explicit PauliOp(PauliTerm term);

  static PauliOp identity(std::size_t width, Complex coefficient = 1.0);
  /// Sum of labelled terms, e.g. {{0.5, "II"}, {0.5, "ZZ"}}.
  static PauliOp from_labels(std::initializer_list<std::pair<Complex, std::string_view>> terms);

  std::size_t width() const { return width_; }
  const std::vector<PauliTerm>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  /// Coefficient of the given string, zero when absent. Assumes a simplified operator.
  Complex coefficient_of(std::string_view label) const;

  /// Renders "0.25·XZIY + (0-0.5i)·ZZII"; coefficients use 12 significant digits.
  std::string to_string() const;

  bool operator==(const PauliOp&) const = default;

 private:
  std::size_t width_;
  std::vector<PauliTerm> terms_;
};

/// Collects like strings, drops |c| <= kDropTolerance, sorts labels lexicographically (I < X < Y < Z).
PauliOp simplify(const PauliOp& a);

PauliOp add(const PauliOp& a, const PauliOp& b);
PauliOp scale(const PauliOp& a, Complex c);
/// Operator product; the result is simplified.
PauliOp multiply(const PauliOp& a, const PauliOp& b);
PauliOp tensor(const PauliOp& a, const PauliOp& b);
PauliOp adjoint(const PauliOp& a);
/// a*b - b*a, simplified.
PauliOp commutator(const PauliOp& a, const PauliOp& b);
bool is_hermitian(const PauliOp& a);

inline PauliOp operator+(const PauliOp& a, const PauliOp& b) { return add(a, b); }
inline PauliOp operator-(const PauliOp& a, const PauliOp& b) { return add(a, scale(b, -1.0)); }
inline PauliOp operator*(const PauliOp& a, const PauliOp& b) { return multiply(a, b); }
inline PauliOp operator*(Complex c, const PauliOp& a) { return scale(a, c); }

/// Dense 2^w x 2^w realization by Kronecker expansion. Throws when w > kMaxDenseQubits.
DenseMatrix to_matrix(const PauliTerm& t);
DenseMatrix to_matrix(const PauliOp& a);

}  // namespace homsim
