#include "dickelab/tensor.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <stdexcept>
#include <string>

namespace dickelab {

std::size_t dimension_of(int n_qubits) {
  if (n_qubits < 1 || n_qubits > kMaxQubits) {
    throw std::invalid_argument("qubit count must lie in 1.." + std::to_string(kMaxQubits) +
                                ", got " + std::to_string(n_qubits));
  }
  return std::size_t{1} << n_qubits;
}

int qubits_for_dimension(std::size_t dim) {
  for (int n = 1; n <= kMaxQubits; ++n) {
    if ((std::size_t{1} << n) == dim) return n;
  }
  throw std::invalid_argument("dimension " + std::to_string(dim) +
                              " is not 2^n for 1 <= n <= " + std::to_string(kMaxQubits));
}

double hermitian_deviation(const Matrix& m) {
  if (m.rows() != m.cols()) return INFINITY;
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

// ---------------------------------------------------------------------------
// StateVector

StateVector::StateVector(Vector amplitudes)
    : n_qubits_(qubits_for_dimension(static_cast<std::size_t>(amplitudes.size()))),
      amp_(std::move(amplitudes)) {
  const double norm2 = amp_.squaredNorm();
  if (std::abs(norm2 - 1.0) > kNormTol) {
    throw std::invalid_argument("state vector is not normalized: sum |a|^2 = " +
                                std::to_string(norm2));
  }
}

StateVector StateVector::basis(std::string_view bits) {
  Vector v = Vector::Zero(static_cast<Eigen::Index>(dimension_of(static_cast<int>(bits.size()))));
  std::size_t index = 0;
  for (char b : bits) {
    if (b != '0' && b != '1') throw std::invalid_argument("basis label must be a bit string");
    index = (index << 1) | static_cast<std::size_t>(b - '0');
  }
  v(static_cast<Eigen::Index>(index)) = 1.0;
  return StateVector(std::move(v));
}

StateVector StateVector::normalized(Vector amplitudes) {
  const double norm = amplitudes.norm();
  if (!(norm > 0.0)) throw std::invalid_argument("cannot normalize the zero vector");
  amplitudes /= norm;
  return StateVector(std::move(amplitudes));
}

cplx StateVector::amplitude(std::string_view bits) const {
  if (static_cast<int>(bits.size()) != n_qubits_) {
    throw std::invalid_argument("basis label length does not match qubit count");
  }
  std::size_t index = 0;
  for (char b : bits) {
    if (b != '0' && b != '1') throw std::invalid_argument("basis label must be a bit string");
    index = (index << 1) | static_cast<std::size_t>(b - '0');
  }
  return amp_(static_cast<Eigen::Index>(index));
}

// ---------------------------------------------------------------------------
// DensityMatrix

DensityMatrix::DensityMatrix(Matrix entries, Validation v) : n_qubits_(0), rho_(std::move(entries)) {
  if (rho_.rows() != rho_.cols()) throw std::invalid_argument("density matrix must be square");
  n_qubits_ = qubits_for_dimension(static_cast<std::size_t>(rho_.rows()));
  if (v == Validation::kCheck) validate();
}

DensityMatrix::DensityMatrix(const StateVector& psi)
    : n_qubits_(psi.n_qubits()), rho_(psi.amplitudes() * psi.amplitudes().adjoint()) {}

DensityMatrix DensityMatrix::maximally_mixed(int n_qubits) {
  const auto d = static_cast<Eigen::Index>(dimension_of(n_qubits));
  return DensityMatrix(Matrix::Identity(d, d) / static_cast<double>(d));
}

double DensityMatrix::min_eigenvalue() const {
  Eigen::SelfAdjointEigenSolver<Matrix> es(rho_, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

void DensityMatrix::validate() const {
  if (const double h = hermitian_deviation(rho_); h > kCheckTol) {
    throw std::runtime_error("density matrix is not Hermitian (deviation " + std::to_string(h) + ")");
  }
  if (const double t = std::abs(rho_.trace() - 1.0); t > kCheckTol) {
    throw std::runtime_error("density matrix trace deviates from 1 by " + std::to_string(t));
  }
  if (const double e = min_eigenvalue(); e < -kCheckTol) {
    throw std::runtime_error("density matrix has negative eigenvalue " + std::to_string(e));
  }
}

// ---------------------------------------------------------------------------
// Operator

Operator::Operator(Matrix entries, bool hermitian)
    : n_qubits_(0), m_(std::move(entries)), hermitian_(hermitian) {
  if (m_.rows() != m_.cols()) throw std::invalid_argument("operator must be square");
  n_qubits_ = qubits_for_dimension(static_cast<std::size_t>(m_.rows()));
  if (hermitian_ && hermitian_deviation(m_) > kHermitianTol) {
    throw std::invalid_argument("operator flagged Hermitian but deviates by " +
                                std::to_string(hermitian_deviation(m_)));
  }
}

Operator Operator::from_matrix(Matrix entries) {
  const bool h = entries.rows() == entries.cols() && hermitian_deviation(entries) <= kHermitianTol;
  return Operator(std::move(entries), h);
}

Operator Operator::identity(int n_qubits) {
  const auto d = static_cast<Eigen::Index>(dimension_of(n_qubits));
  return Operator(Matrix::Identity(d, d), true);
}

Operator Operator::adjoint() const { return Operator(m_.adjoint(), hermitian_); }

cplx Operator::trace() const {
  auto neumaier = [this](auto part) {
    double sum = 0.0;
    double carry = 0.0;
    for (Eigen::Index i = 0; i < m_.rows(); ++i) {
      const double x = part(m_(i, i));
      const double t = sum + x;
      carry += std::abs(sum) >= std::abs(x) ? (sum - t) + x : (x - t) + sum;
      sum = t;
    }
    return sum + carry;
  };
  return {neumaier([](cplx z) { return z.real(); }), neumaier([](cplx z) { return z.imag(); })};
}

bool Operator::is_unitary(double tol) const {
  const Matrix prod = m_ * m_.adjoint();
  return (prod - Matrix::Identity(m_.rows(), m_.cols())).cwiseAbs().maxCoeff() <= tol;
}

namespace {
void require_same_space(const Operator& a, const Operator& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("operator dimension mismatch");
}
}  // namespace

Operator operator+(const Operator& a, const Operator& b) {
  require_same_space(a, b);
  return Operator(a.m_ + b.m_, a.hermitian_ && b.hermitian_);
}

Operator operator-(const Operator& a, const Operator& b) {
  require_same_space(a, b);
  return Operator(a.m_ - b.m_, a.hermitian_ && b.hermitian_);
}

Operator operator*(const Operator& a, const Operator& b) {
  require_same_space(a, b);
  return Operator::from_matrix(a.m_ * b.m_);
}

Operator operator*(double s, const Operator& a) { return Operator(s * a.m_, a.hermitian_); }

Operator operator*(cplx s, const Operator& a) {
  if (s.imag() == 0.0) return s.real() * a;
  return Operator::from_matrix(s * a.m_);
}

Operator operator-(const Operator& a) { return Operator(-a.m_, a.hermitian_); }

StateVector operator*(const Operator& u, const StateVector& psi) {
  if (u.dim() != psi.dim()) throw std::invalid_argument("operator/state dimension mismatch");
  return StateVector(u.matrix() * psi.amplitudes());
}

// ---------------------------------------------------------------------------
// Pauli strings

const Matrix& pauli_matrix(Pauli p) {
  static const Matrix kI = Matrix::Identity(2, 2);
  static const Matrix kX = (Matrix(2, 2) << 0, 1, 1, 0).finished();
  static const Matrix kY = (Matrix(2, 2) << 0, cplx(0, -1), cplx(0, 1), 0).finished();
  static const Matrix kZ = (Matrix(2, 2) << 1, 0, 0, -1).finished();
  switch (p) {
    case Pauli::I: return kI;
    case Pauli::X: return kX;
    case Pauli::Y: return kY;
    case Pauli::Z: return kZ;
  }
  throw std::invalid_argument("unknown Pauli label");
}

PauliString::PauliString(std::vector<Pauli> labels, int phase_power)
    : labels_(std::move(labels)), phase_power_(((phase_power % 4) + 4) % 4) {
  dimension_of(static_cast<int>(labels_.size()));
}

PauliString PauliString::parse(std::string_view text) {
  int power = 0;
  if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
    if (text.front() == '-') power = 2;
    text.remove_prefix(1);
  }
  if (!text.empty() && text.front() == 'i') {
    power += 1;
    text.remove_prefix(1);
  }
  std::vector<Pauli> labels;
  labels.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case 'I': labels.push_back(Pauli::I); break;
      case 'X': labels.push_back(Pauli::X); break;
      case 'Y': labels.push_back(Pauli::Y); break;
      case 'Z': labels.push_back(Pauli::Z); break;
      default: throw std::invalid_argument(std::string("invalid Pauli label '") + c + "'");
    }
  }
  return PauliString(std::move(labels), power);
}

PauliString PauliString::single(int n_qubits, int qubit, Pauli p) {
  dimension_of(n_qubits);
  if (qubit < 1 || qubit > n_qubits) throw std::invalid_argument("qubit index out of range");
  std::vector<Pauli> labels(static_cast<std::size_t>(n_qubits), Pauli::I);
  labels[static_cast<std::size_t>(qubit - 1)] = p;
  return PauliString(std::move(labels));
}

cplx PauliString::phase() const {
  static constexpr cplx kPowers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return kPowers[phase_power_];
}

std::string PauliString::to_string() const {
  static constexpr const char* kPrefix[4] = {"+", "+i", "-", "-i"};
  std::string s = kPrefix[phase_power_];
  for (Pauli p : labels_) s.push_back(static_cast<char>(p));
  return s;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

Matrix embed_single(const Matrix& gate, int qubit, int n_qubits) {
  dimension_of(n_qubits);
  if (qubit < 1 || qubit > n_qubits) throw std::invalid_argument("qubit index out of range");
  Matrix out = Matrix::Identity(1, 1);
  for (int q = 1; q <= n_qubits; ++q) {
    out = kron(out, q == qubit ? gate : pauli_matrix(Pauli::I));
  }
  return out;
}

Operator pauli_string_to_operator(const PauliString& p) {
  Matrix out = Matrix::Identity(1, 1);
  for (Pauli label : p.labels()) out = kron(out, pauli_matrix(label));
  out *= p.phase();
  return Operator(std::move(out), p.has_real_phase());
}

// ---------------------------------------------------------------------------
// Expectations

namespace {
void require_observable(const Operator& obs, std::size_t dim) {
  if (obs.dim() != dim) throw std::invalid_argument("observable/state dimension mismatch");
  if (!obs.is_hermitian()) throw std::invalid_argument("observable is not Hermitian");
}

double real_part_checked(cplx value) {
  if (std::abs(value.imag()) > kCheckTol) {
    throw std::runtime_error("expectation has imaginary residue " + std::to_string(value.imag()));
  }
  return value.real();
}
}  // namespace

double expectation(const StateVector& psi, const Operator& obs) {
  require_observable(obs, psi.dim());
  return real_part_checked(psi.amplitudes().dot(obs.matrix() * psi.amplitudes()));
}

double expectation(const DensityMatrix& rho, const Operator& obs) {
  require_observable(obs, rho.dim());
  // Tr(rho A) = sum_ij rho_ij A_ji
  return real_part_checked((rho.entries().cwiseProduct(obs.matrix().transpose())).sum());
}

double fidelity_with_pure(const DensityMatrix& rho, const StateVector& psi) {
  if (rho.dim() != psi.dim()) throw std::invalid_argument("state dimension mismatch");
  return real_part_checked(psi.amplitudes().dot(rho.entries() * psi.amplitudes()));
}

}  // namespace dickelab
