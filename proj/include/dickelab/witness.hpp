#pragma once

// Structure-factor operators and the witnesses built from them.
//
// Spin operators are the Pauli matrices themselves (eigenvalues +-1). Qubit
// positions are unit spaced, r_i - r_j = i - j.

#include "dickelab/noise.hpp"
#include "dickelab/tensor.hpp"

#include <array>
#include <optional>

namespace dickelab {

enum class Axis { x, y, z };

enum class Symmetrization {
  // sum_{i<j} cos(k(i-j)) S_i^a S_j^b, the average of the k and -k forms
  kSymmetrized,
  // sum_{i<j} exp(ik(i-j)) S_i^a S_j^b
  kRaw,
};

// Coefficients and per-axis wave numbers of a structural witness
//   W = 1 - [c_x S^xx(k_x) + c_y S^yy(k_y) + c_z S^zz(k_z)] / B(n, 2).
struct WitnessSpec {
  int n_qubits = 4;
  std::array<double, 3> c{1.0, 1.0, 1.0};
  std::array<double, 3> k{0.0, 0.0, 0.0};

  // Throws std::invalid_argument if n < 2 or some |c_a| > 1.
  void validate() const;
};

Operator structure_factor(Axis alpha, Axis beta, double k, int n,
                          Symmetrization sym = Symmetrization::kSymmetrized);

// Single-k witness W(k) = 1 - Sigma(k).
Operator structural_witness(double k, const std::array<double, 3>& c, int n);

Operator generalized_witness(double kx, double ky, double kz, const std::array<double, 3>& c, int n);
Operator generalized_witness(const WitnessSpec& spec);

// W(pi) with c = (1, 1, 1).
Operator w_pi_witness(int n = 4);
// 1 - [S^xx(pi) + S^yy(pi) - S^zz(0)] / 6 on four qubits.
Operator wbar_witness();

// (1/8)[21 - 2S_xx(pi) - 2S_yy(pi) + S_zz(0) - 2XXXX - 2YYYY - 7ZZZZ];
// detects genuine four-qubit entanglement close to |D4ph>.
Operator multipartite_witness();

// F >= 2/3 - <W_mult>/3.
double fidelity_bound(double wmult_value);

struct BoundReport {
  double witness_value = 0.0;
  std::optional<double> fidelity_lower_bound;
  double random_robustness_lower_bound = 0.0;
  double trace_of_witness = 0.0;
  std::size_t dimension = 0;
};

// E_r >= D |<W>| / Tr(W) when <W> < 0, clamped to 0 otherwise. Throws
// std::invalid_argument for a non-Hermitian witness or Tr(W) <= 0.
BoundReport robustness_bound(const DensityMatrix& rho, const Operator& w);
// Same bound from an externally measured witness value.
BoundReport robustness_bound_from_value(double witness_value, const Operator& w);

struct ClosedFormExpectations {
  double sxx;   // <S_xx(pi)>
  double syy;   // <S_yy(pi)>
  double szz;   // <S_zz(0)>
  double wbar;  // 1 - (sxx + syy - szz) / 6
};

// Analytic expectations on noisy_dicke_state(p).
ClosedFormExpectations closed_form_expectations(const NoiseParams& p);

// -0.455 + 2.333 q2 - 2.333 q2^2, the three-digit rounded fit for
// q1 = q3 = 0.05.
double rounded_wbar_curve(double q2);

}  // namespace dickelab
