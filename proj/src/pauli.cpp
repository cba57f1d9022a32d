#include "homsim/pauli.hpp"

#include <algorithm>
#include <iomanip>
#include <map>
#include <sstream>
#include <stdexcept>

namespace homsim {

namespace {

void require_same_width(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    std::ostringstream msg;
    msg << what << ": register width mismatch (" << a << " vs " << b << ")";
    throw std::invalid_argument(msg.str());
  }
}

DenseMatrix single_qubit_matrix(PauliAxis a) {
  DenseMatrix m = DenseMatrix::Zero(2, 2);
  const Complex i{0.0, 1.0};
  switch (a) {
    case PauliAxis::I:
      m(0, 0) = 1.0;
      m(1, 1) = 1.0;
      break;
    case PauliAxis::X:
      m(0, 1) = 1.0;
      m(1, 0) = 1.0;
      break;
    case PauliAxis::Y:
      m(0, 1) = -i;
      m(1, 0) = i;
      break;
    case PauliAxis::Z:
      m(0, 0) = 1.0;
      m(1, 1) = -1.0;
      break;
  }
  return m;
}

DenseMatrix kron(const DenseMatrix& a, const DenseMatrix& b) {
  DenseMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index r = 0; r < a.rows(); ++r) {
    for (Eigen::Index c = 0; c < a.cols(); ++c) {
      out.block(r * b.rows(), c * b.cols(), b.rows(), b.cols()) = a(r, c) * b;
    }
  }
  return out;
}

void require_dense_width(std::size_t w) {
  if (w > kMaxDenseQubits) {
    throw std::invalid_argument("to_matrix: register width " + std::to_string(w) +
                                " exceeds dense cap of " + std::to_string(kMaxDenseQubits));
  }
}

std::string format_coefficient(Complex c) {
  std::ostringstream os;
  os << std::setprecision(12);
  if (c.imag() == 0.0) {
    os << c.real();
  } else if (c.real() == 0.0) {
    os << c.imag() << "i";
  } else {
    os << "(" << c.real() << (c.imag() < 0 ? "-" : "+") << std::abs(c.imag()) << "i)";
  }
  return os.str();
}

}  // namespace

char axis_char(PauliAxis a) {
  static constexpr char kChars[] = {'I', 'X', 'Y', 'Z'};
  return kChars[static_cast<int>(a)];
}

PauliAxis axis_from_char(char c) {
  switch (c) {
    case 'I': return PauliAxis::I;
    case 'X': return PauliAxis::X;
    case 'Y': return PauliAxis::Y;
    case 'Z': return PauliAxis::Z;
    default: throw std::invalid_argument(std::string("invalid Pauli character '") + c + "'");
  }
}

Complex Phase::value() const {
  switch (power & 3u) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

AxisProduct multiply_axes(PauliAxis a, PauliAxis b) {
  if (a == PauliAxis::I) return {b, {}};
  if (b == PauliAxis::I) return {a, {}};
  if (a == b) return {PauliAxis::I, {}};
  // The three non-identity axes are 1, 2, 3; the product is the remaining one.
  const auto ia = static_cast<int>(a);
  const auto ib = static_cast<int>(b);
  const auto result = static_cast<PauliAxis>(6 - ia - ib);
  // Cyclic order X->Y->Z gives +i, anti-cyclic gives -i.
  const bool cyclic = (ib - ia + 3) % 3 == 1;
  return {result, Phase{static_cast<std::uint8_t>(cyclic ? 1 : 3)}};
}

PauliTerm PauliTerm::from_label(std::string_view label, Complex coefficient) {
  std::vector<PauliAxis> axes;
  axes.reserve(label.size());
  for (char c : label) axes.push_back(axis_from_char(c));
  return {coefficient, std::move(axes)};
}

std::string PauliTerm::label() const {
  std::string s;
  s.reserve(axes.size());
  for (auto a : axes) s.push_back(axis_char(a));
  return s;
}

bool PauliTerm::is_identity() const {
  return std::all_of(axes.begin(), axes.end(), [](PauliAxis a) { return a == PauliAxis::I; });
}

std::size_t PauliTerm::weight() const {
  return static_cast<std::size_t>(
      std::count_if(axes.begin(), axes.end(), [](PauliAxis a) { return a != PauliAxis::I; }));
}

PauliTerm multiply(const PauliTerm& a, const PauliTerm& b) {
  require_same_width(a.width(), b.width(), "term_multiply");
  PauliTerm out;
  out.axes.resize(a.width());
  Phase phase;
  for (std::size_t q = 0; q < a.width(); ++q) {
    const auto p = multiply_axes(a.axes[q], b.axes[q]);
    out.axes[q] = p.axis;
    phase *= p.phase;
  }
  out.coefficient = a.coefficient * b.coefficient * phase.value();
  return out;
}

PauliOp::PauliOp(std::size_t width, std::vector<PauliTerm> terms)
    : width_(width), terms_(std::move(terms)) {
  for (const auto& t : terms_) require_same_width(width_, t.width(), "PauliOp");
}

PauliOp::PauliOp(PauliTerm term) : width_(term.width()) { terms_.push_back(std::move(term)); }

PauliOp PauliOp::identity(std::size_t width, Complex coefficient) {
  return PauliOp(PauliTerm(coefficient, std::vector<PauliAxis>(width, PauliAxis::I)));
}

PauliOp PauliOp::from_labels(std::initializer_list<std::pair<Complex, std::string_view>> terms) {
  if (terms.size() == 0) throw std::invalid_argument("from_labels: need at least one term");
  std::vector<PauliTerm> out;
  for (const auto& [c, label] : terms) out.push_back(PauliTerm::from_label(label, c));
  const auto w = out.front().width();
  return PauliOp(w, std::move(out));
}

Complex PauliOp::coefficient_of(std::string_view label) const {
  for (const auto& t : terms_) {
    if (t.label() == label) return t.coefficient;
  }
  return {0.0, 0.0};
}

std::string PauliOp::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < terms_.size(); ++k) {
    if (k > 0) out += " + ";
    out += format_coefficient(terms_[k].coefficient);
    out += "·";
    out += terms_[k].label();
  }
  return out;
}

PauliOp simplify(const PauliOp& a) {
  // std::vector<PauliAxis> compares lexicographically with I < X < Y < Z.
  std::map<std::vector<PauliAxis>, Complex> collected;
  for (const auto& t : a.terms()) collected[t.axes] += t.coefficient;
  std::vector<PauliTerm> terms;
  terms.reserve(collected.size());
  for (auto& [axes, c] : collected) {
    if (std::abs(c) > kDropTolerance) terms.emplace_back(c, axes);
  }
  return PauliOp(a.width(), std::move(terms));
}

PauliOp add(const PauliOp& a, const PauliOp& b) {
  require_same_width(a.width(), b.width(), "op_add");
  std::vector<PauliTerm> terms = a.terms();
  terms.insert(terms.end(), b.terms().begin(), b.terms().end());
  return simplify(PauliOp(a.width(), std::move(terms)));
}

PauliOp scale(const PauliOp& a, Complex c) {
  std::vector<PauliTerm> terms = a.terms();
  for (auto& t : terms) t.coefficient *= c;
  return simplify(PauliOp(a.width(), std::move(terms)));
}

PauliOp multiply(const PauliOp& a, const PauliOp& b) {
  require_same_width(a.width(), b.width(), "op_multiply");
  std::vector<PauliTerm> terms;
  terms.reserve(a.size() * b.size());
  for (const auto& x : a.terms()) {
    for (const auto& y : b.terms()) terms.push_back(multiply(x, y));
  }
  return simplify(PauliOp(a.width(), std::move(terms)));
}

PauliOp tensor(const PauliOp& a, const PauliOp& b) {
  std::vector<PauliTerm> terms;
  terms.reserve(a.size() * b.size());
  for (const auto& x : a.terms()) {
    for (const auto& y : b.terms()) {
      std::vector<PauliAxis> axes = x.axes;
      axes.insert(axes.end(), y.axes.begin(), y.axes.end());
      terms.emplace_back(x.coefficient * y.coefficient, std::move(axes));
    }
  }
  return simplify(PauliOp(a.width() + b.width(), std::move(terms)));
}

PauliOp adjoint(const PauliOp& a) {
  std::vector<PauliTerm> terms = a.terms();
  for (auto& t : terms) t.coefficient = std::conj(t.coefficient);
  return PauliOp(a.width(), std::move(terms));
}

PauliOp commutator(const PauliOp& a, const PauliOp& b) { return multiply(a, b) - multiply(b, a); }

bool is_hermitian(const PauliOp& a) { return (a - adjoint(a)).empty(); }

DenseMatrix to_matrix(const PauliTerm& t) {
  require_dense_width(t.width());
  DenseMatrix m = DenseMatrix::Identity(1, 1);
  for (auto axis : t.axes) m = kron(m, single_qubit_matrix(axis));
  return t.coefficient * m;
}

DenseMatrix to_matrix(const PauliOp& a) {
  require_dense_width(a.width());
  const Eigen::Index dim = Eigen::Index{1} << a.width();
  DenseMatrix m = DenseMatrix::Zero(dim, dim);
  for (const auto& t : a.terms()) m += to_matrix(t);
  return m;
}

}  // namespace homsim
