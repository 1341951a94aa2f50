#pragma once

// Dense complex linear algebra over small qubit registers.
//
// Basis convention: qubit 1 is the most significant bit of the basis index,
// so |q1 q2 ... qn> has index q1*2^(n-1) + ... + qn. Every module in this
// library uses that ordering.

#include <Eigen/Dense>

#include <complex>
#include <string>
#include <string_view>
#include <vector>

namespace dickelab {

using cplx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

inline constexpr int kMaxQubits = 8;

inline constexpr double kNormTol = 1e-12;
inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kCheckTol = 1e-10;

// Selects whether density-matrix invariants (Hermitian, unit trace, PSD) are
// asserted on construction. Tests always run with kCheck; long sweeps may
// opt out.
enum class Validation { kCheck, kSkip };

std::size_t dimension_of(int n_qubits);
int qubits_for_dimension(std::size_t dim);

// Largest |M_ij - conj(M_ji)|.
double hermitian_deviation(const Matrix& m);

class StateVector {
 public:
  // Throws std::invalid_argument unless the amplitudes have length 2^n for
  // 1 <= n <= 8 and unit norm within 1e-12.
  explicit StateVector(Vector amplitudes);

  // Computational basis state from a bit string such as "0110".
  static StateVector basis(std::string_view bits);
  // Rescales a nonzero vector to unit norm.
  static StateVector normalized(Vector amplitudes);

  int n_qubits() const { return n_qubits_; }
  std::size_t dim() const { return static_cast<std::size_t>(amp_.size()); }
  const Vector& amplitudes() const { return amp_; }
  cplx amplitude(std::string_view bits) const;
  cplx operator[](std::size_t index) const { return amp_(static_cast<Eigen::Index>(index)); }

 private:
  int n_qubits_;
  Vector amp_;
};

class DensityMatrix {
 public:
  explicit DensityMatrix(Matrix entries, Validation v = Validation::kCheck);
  explicit DensityMatrix(const StateVector& psi);

  static DensityMatrix maximally_mixed(int n_qubits);

  int n_qubits() const { return n_qubits_; }
  std::size_t dim() const { return static_cast<std::size_t>(rho_.rows()); }
  const Matrix& entries() const { return rho_; }
  double trace() const { return rho_.trace().real(); }
  double min_eigenvalue() const;

  // Throws std::runtime_error naming the first violated invariant.
  void validate() const;

 private:
  int n_qubits_;
  Matrix rho_;
};

class Operator {
 public:
  // When `hermitian` is true the matrix must be Hermitian within 1e-12.
  Operator(Matrix entries, bool hermitian);
  // Detects the Hermitian flag from the entries.
  static Operator from_matrix(Matrix entries);
  static Operator identity(int n_qubits);

  int n_qubits() const { return n_qubits_; }
  std::size_t dim() const { return static_cast<std::size_t>(m_.rows()); }
  const Matrix& matrix() const { return m_; }
  bool is_hermitian() const { return hermitian_; }
  // Compensated (Neumaier) sum of the diagonal.
  cplx trace() const;

  Operator adjoint() const;
  bool is_unitary(double tol = kCheckTol) const;

  friend Operator operator+(const Operator& a, const Operator& b);
  friend Operator operator-(const Operator& a, const Operator& b);
  friend Operator operator*(const Operator& a, const Operator& b);
  friend Operator operator*(double s, const Operator& a);
  friend Operator operator*(cplx s, const Operator& a);
  friend Operator operator-(const Operator& a);

 private:
  int n_qubits_;
  Matrix m_;
  bool hermitian_;
};

StateVector operator*(const Operator& u, const StateVector& psi);

enum class Pauli : char { I = 'I', X = 'X', Y = 'Y', Z = 'Z' };

// A tensor product of single-qubit Paulis times a phase i^k, k in 0..3.
class PauliString {
 public:
  PauliString(std::vector<Pauli> labels, int phase_power = 0);

  // Parses "ZIII", "-YYII", "iXZ", "-iZ". The optional prefix is one of
  // "", "+", "-", "i", "+i", "-i".
  static PauliString parse(std::string_view text);
  // Single Pauli `p` on qubit `qubit` (1-based) of an n-qubit register.
  static PauliString single(int n_qubits, int qubit, Pauli p);

  int n_qubits() const { return static_cast<int>(labels_.size()); }
  const std::vector<Pauli>& labels() const { return labels_; }
  int phase_power() const { return phase_power_; }
  cplx phase() const;
  bool has_real_phase() const { return phase_power_ % 2 == 0; }

  std::string to_string() const;

  friend bool operator==(const PauliString&, const PauliString&) = default;

 private:
  std::vector<Pauli> labels_;
  int phase_power_;
};

const Matrix& pauli_matrix(Pauli p);

Matrix kron(const Matrix& a, const Matrix& b);

// Embeds a 2x2 gate acting on `qubit` (1-based) of an n-qubit register.
Matrix embed_single(const Matrix& gate, int qubit, int n_qubits);

Operator pauli_string_to_operator(const PauliString& p);

// <psi|obs|psi> and Tr(rho obs). The observable must be Hermitian; an
// imaginary residue above 1e-10 raises std::runtime_error.
double expectation(const StateVector& psi, const Operator& obs);
double expectation(const DensityMatrix& rho, const Operator& obs);

// <psi|rho|psi>.
double fidelity_with_pure(const DensityMatrix& rho, const StateVector& psi);

}  // namespace dickelab
