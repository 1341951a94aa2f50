#include "dickelab/circuits.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

namespace dickelab {

namespace {

bool needs_control(GateKind k) { return k == GateKind::CX || k == GateKind::CZbar; }

Matrix projector(int bit) {
  Matrix p = Matrix::Zero(2, 2);
  p(bit, bit) = 1.0;
  return p;
}

Matrix hadamard() {
  const double s = 1.0 / std::sqrt(2.0);
  return (Matrix(2, 2) << s, s, s, -s).finished();
}

}  // namespace

void validate_gate(const GateSpec& g, int n_qubits) {
  dimension_of(n_qubits);
  auto in_range = [n_qubits](int q) { return q >= 1 && q <= n_qubits; };
  if (!in_range(g.target)) throw std::invalid_argument("gate target out of range");
  if (needs_control(g.kind)) {
    if (!g.control) throw std::invalid_argument("controlled gate requires a control qubit");
    if (!in_range(*g.control)) throw std::invalid_argument("gate control out of range");
    if (*g.control == g.target) throw std::invalid_argument("control and target coincide");
  } else if (g.control) {
    throw std::invalid_argument("single-qubit gate given a control qubit");
  }
}

Operator gate_operator(const GateSpec& g, int n_qubits) {
  validate_gate(g, n_qubits);
  switch (g.kind) {
    case GateKind::H: return Operator(embed_single(hadamard(), g.target, n_qubits), true);
    case GateKind::X: return Operator(embed_single(pauli_matrix(Pauli::X), g.target, n_qubits), true);
    case GateKind::Z: return Operator(embed_single(pauli_matrix(Pauli::Z), g.target, n_qubits), true);
    case GateKind::CX: {
      // |0><0|_c 1_t + |1><1|_c X_t
      const int c = *g.control;
      Matrix m = embed_single(projector(0), c, n_qubits) +
                 embed_single(projector(1), c, n_qubits) * embed_single(pauli_matrix(Pauli::X), g.target, n_qubits);
      return Operator(std::move(m), true);
    }
    case GateKind::CZbar: {
      // |1><1|_c 1_t + |0><0|_c Z_t
      const int c = *g.control;
      Matrix m = embed_single(projector(1), c, n_qubits) +
                 embed_single(projector(0), c, n_qubits) * embed_single(pauli_matrix(Pauli::Z), g.target, n_qubits);
      return Operator(std::move(m), true);
    }
  }
  throw std::invalid_argument("unknown gate kind");
}

Operator circuit_unitary(const CircuitSpec& c) {
  Operator u = Operator::identity(c.n_qubits);
  for (const auto& g : c.gates) u = gate_operator(g, c.n_qubits) * u;
  if (!u.is_unitary()) throw std::runtime_error("circuit does not compose to a unitary");
  return u;
}

StateVector phased_dicke4() {
  const double a = 1.0 / std::sqrt(6.0);
  Vector v = Vector::Zero(16);
  v(0b0011) = a;
  v(0b1100) = a;
  v(0b0110) = a;
  v(0b1001) = a;
  v(0b0101) = -a;
  v(0b1010) = -a;
  return StateVector(std::move(v));
}

StateVector xi_state() {
  const double a = 1.0 / std::sqrt(6.0);
  Vector v = Vector::Zero(16);
  v(0b0010) = a;
  v(0b1000) = -a;
  v(0b0111) = 2.0 * a;
  return StateVector(std::move(v));
}

StateVector symmetric_dicke(int n, int k_excitations) {
  const std::size_t dim = dimension_of(n);
  if (k_excitations < 0 || k_excitations > n) {
    throw std::invalid_argument("excitation number must lie in 0.." + std::to_string(n));
  }
  Vector v = Vector::Zero(static_cast<Eigen::Index>(dim));
  for (std::size_t i = 0; i < dim; ++i) {
    if (std::popcount(i) == k_excitations) v(static_cast<Eigen::Index>(i)) = 1.0;
  }
  return StateVector::normalized(std::move(v));
}

CircuitSpec dicke_transform_circuit() {
  return CircuitSpec{4,
                     {{GateKind::H, 3, {}},
                      {GateKind::H, 1, {}},
                      {GateKind::CX, 4, 3},
                      {GateKind::CX, 2, 1},
                      {GateKind::CZbar, 4, 3},
                      {GateKind::CZbar, 2, 1},
                      {GateKind::Z, 4, {}}}};
}

CircuitSpec dicke_transform_variant_circuit() {
  return CircuitSpec{4,
                     {{GateKind::H, 3, {}},
                      {GateKind::H, 1, {}},
                      {GateKind::CX, 4, 3},
                      {GateKind::CX, 2, 1},
                      {GateKind::Z, 1, {}}}};
}

Operator dicke_transform() { return circuit_unitary(dicke_transform_circuit()); }

VariantTransform dicke_transform_variant() {
  Operator u = circuit_unitary(dicke_transform_variant_circuit());
  const cplx phase = phased_dicke4().amplitudes().dot(u.matrix() * xi_state().amplitudes());
  return VariantTransform{std::move(u), phase};
}

namespace {

// Entry (row, col) of the unphased Pauli string with the given labels.
cplx pauli_entry(const std::vector<Pauli>& labels, std::size_t row, std::size_t col) {
  const int n = static_cast<int>(labels.size());
  cplx v = 1.0;
  for (int q = 0; q < n; ++q) {
    const int shift = n - 1 - q;
    const auto r = static_cast<Eigen::Index>((row >> shift) & 1U);
    const auto c = static_cast<Eigen::Index>((col >> shift) & 1U);
    v *= pauli_matrix(labels[static_cast<std::size_t>(q)])(r, c);
    if (v == 0.0) return v;
  }
  return v;
}

}  // namespace

PauliDecomposition conjugate_pauli_checked(const Operator& u, const PauliString& p) {
  if (u.n_qubits() != p.n_qubits()) throw std::invalid_argument("unitary/Pauli qubit count mismatch");
  if (!u.is_unitary()) throw std::invalid_argument("conjugating operator is not unitary");
  const Matrix m = u.matrix() * pauli_string_to_operator(p).matrix() * u.matrix().adjoint();
  const int n = p.n_qubits();
  const std::size_t dim = dimension_of(n);

  static constexpr Pauli kAll[4] = {Pauli::I, Pauli::X, Pauli::Y, Pauli::Z};
  std::vector<Pauli> labels(static_cast<std::size_t>(n), Pauli::I);
  std::vector<Pauli> best_labels = labels;
  cplx best_coeff = 0.0;

  // Enumerate all 4^n label strings; a string with X-mask x has nonzero
  // entries only at (row, row ^ x), so each coefficient costs O(2^n).
  const std::size_t count = std::size_t{1} << (2 * n);
  for (std::size_t code = 0; code < count; ++code) {
    std::size_t xmask = 0;
    for (int q = 0; q < n; ++q) {
      const Pauli l = kAll[(code >> (2 * (n - 1 - q))) & 3U];
      labels[static_cast<std::size_t>(q)] = l;
      if (l == Pauli::X || l == Pauli::Y) xmask |= std::size_t{1} << (n - 1 - q);
    }
    cplx coeff = 0.0;
    for (std::size_t r = 0; r < dim; ++r) {
      const std::size_t c = r ^ xmask;
      // Tr(P^dagger M) = sum_rc conj(P_rc) M_rc
      coeff += std::conj(pauli_entry(labels, r, c)) * m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
    }
    coeff /= static_cast<double>(dim);
    if (std::abs(coeff) > std::abs(best_coeff)) {
      best_coeff = coeff;
      best_labels = labels;
    }
  }

  int power = -1;
  static constexpr cplx kPowers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  for (int k = 0; k < 4; ++k) {
    if (std::abs(best_coeff - kPowers[k]) <= kCheckTol) power = k;
  }
  PauliString match(best_labels, power < 0 ? 0 : power);
  const Matrix rest = m - best_coeff * pauli_string_to_operator(PauliString(best_labels)).matrix();
  const double residual = rest.norm() / std::sqrt(static_cast<double>(dim));
  if (power < 0 || residual > kCheckTol) {
    throw std::runtime_error("conjugated operator is not a single Pauli string (residual " +
                             std::to_string(residual) + ")");
  }
  return PauliDecomposition{std::move(match), residual};
}

PauliString conjugate_pauli(const Operator& u, const PauliString& p) {
  return conjugate_pauli_checked(u, p).pauli;
}

}  // namespace dickelab
