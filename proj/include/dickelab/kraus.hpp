#pragma once

#include "dickelab/tensor.hpp"

#include <vector>

namespace dickelab {

// Completely positive trace-preserving map rho -> sum_m K_m rho K_m^dagger.
class KrausChannel {
 public:
  // Throws std::invalid_argument when the operator list is empty or mixes
  // dimensions, std::runtime_error when sum K^dagger K deviates from the
  // identity by more than 1e-10 in any entry.
  KrausChannel(int n_qubits, std::vector<Operator> kraus_ops);

  static KrausChannel identity(int n_qubits);

  int n_qubits() const { return n_qubits_; }
  const std::vector<Operator>& kraus_ops() const { return ops_; }
  std::size_t size() const { return ops_.size(); }

  // Largest entry of |sum K^dagger K - 1|.
  double completeness_deviation() const;

  // Channel u . this . u^dagger, i.e. Kraus operators u K u^dagger.
  KrausChannel conjugated_by(const Operator& u) const;

 private:
  int n_qubits_;
  std::vector<Operator> ops_;
};

DensityMatrix apply_channel(const DensityMatrix& rho, const KrausChannel& ch,
                            Validation v = Validation::kCheck);

// Choi matrix sum_ij |i><j| (x) Phi(|i><j|), dimension 4^n. Two channels are
// equal iff their Choi matrices are.
Matrix choi_matrix(const KrausChannel& ch);

}  // namespace dickelab
