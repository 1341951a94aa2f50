#include "dickelab/kraus.hpp"

#include <stdexcept>
#include <string>

namespace dickelab {

KrausChannel::KrausChannel(int n_qubits, std::vector<Operator> kraus_ops)
    : n_qubits_(n_qubits), ops_(std::move(kraus_ops)) {
  const std::size_t dim = dimension_of(n_qubits);
  if (ops_.empty()) throw std::invalid_argument("Kraus channel needs at least one operator");
  for (const auto& k : ops_) {
    if (k.dim() != dim) throw std::invalid_argument("Kraus operator dimension mismatch");
  }
  if (const double dev = completeness_deviation(); dev > kCheckTol) {
    throw std::runtime_error("Kraus completeness violated by " + std::to_string(dev));
  }
}

KrausChannel KrausChannel::identity(int n_qubits) {
  return KrausChannel(n_qubits, {Operator::identity(n_qubits)});
}

double KrausChannel::completeness_deviation() const {
  const auto d = static_cast<Eigen::Index>(dimension_of(n_qubits_));
  Matrix sum = Matrix::Zero(d, d);
  for (const auto& k : ops_) sum += k.matrix().adjoint() * k.matrix();
  return (sum - Matrix::Identity(d, d)).cwiseAbs().maxCoeff();
}

KrausChannel KrausChannel::conjugated_by(const Operator& u) const {
  if (u.dim() != dimension_of(n_qubits_)) throw std::invalid_argument("unitary dimension mismatch");
  if (!u.is_unitary()) throw std::invalid_argument("conjugating operator is not unitary");
  std::vector<Operator> out;
  out.reserve(ops_.size());
  for (const auto& k : ops_) out.push_back(Operator::from_matrix(u.matrix() * k.matrix() * u.matrix().adjoint()));
  return KrausChannel(n_qubits_, std::move(out));
}

DensityMatrix apply_channel(const DensityMatrix& rho, const KrausChannel& ch, Validation v) {
  if (rho.n_qubits() != ch.n_qubits()) throw std::invalid_argument("channel/state dimension mismatch");
  const auto d = static_cast<Eigen::Index>(rho.dim());
  Matrix out = Matrix::Zero(d, d);
  for (const auto& k : ch.kraus_ops()) out.noalias() += k.matrix() * rho.entries() * k.matrix().adjoint();
  // Strip the antihermitian rounding residue so downstream checks see an
  // exactly Hermitian matrix.
  Matrix sym = (out + out.adjoint()) * 0.5;
  return DensityMatrix(std::move(sym), v);
}

Matrix choi_matrix(const KrausChannel& ch) {
  const auto d = static_cast<Eigen::Index>(dimension_of(ch.n_qubits()));
  Matrix choi = Matrix::Zero(d * d, d * d);
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = 0; j < d; ++j) {
      // Phi(|i><j|) = sum_m K_m[:, i] K_m[:, j]^dagger
      Matrix block = Matrix::Zero(d, d);
      for (const auto& k : ch.kraus_ops()) {
        block.noalias() += k.matrix().col(i) * k.matrix().col(j).adjoint();
      }
      choi.block(i * d, j * d, d, d) = block;
    }
  }
  return choi;
}

}  // namespace dickelab
