#pragma once

// Numerical separability check for witness operators.
//
// Tr(sigma W) is linear in sigma, so its minimum over the convex set of fully
// separable states is attained at an extreme point, i.e. a pure product
// state. The oracle therefore searches only over tensor products of
// single-qubit pure states parameterized by Bloch angles.

#include "dickelab/tensor.hpp"

#include <cstdint>
#include <vector>

namespace dickelab {

struct ProductStateParams {
  std::vector<double> theta;  // polar angle, [0, pi]
  std::vector<double> phi;    // azimuth, [0, 2 pi)

  int n_qubits() const { return static_cast<int>(theta.size()); }
  // Throws std::invalid_argument on mismatched lengths or out-of-range angles.
  void validate() const;
};

// (x)_i (cos(theta_i/2)|0> + e^{i phi_i} sin(theta_i/2)|1>)
StateVector product_state(const ProductStateParams& params);

struct OracleConfig {
  int restarts = 32;
  int samples = 4096;
  std::uint64_t seed = 7;
  double tol = 1e-6;
  int max_sweeps = 200;
};

struct OracleReport {
  double min_value = 0.0;
  ProductStateParams argmin;
  int restarts = 0;
  int samples = 0;
  bool converged = false;
  std::uint64_t seed = 0;
};

// Draws `samples` area-uniform random product states, then runs coordinate
// descent (golden-section line search per angle, cycled until a full sweep
// improves by less than tol/10 or max_sweeps is reached) from the best
// `restarts` of them. Deterministic for a fixed config.
OracleReport minimize_witness(const Operator& w, const OracleConfig& config = {});

// True iff minimize_witness finds no product state with <W> < -tol.
bool verify_witness(const Operator& w, const OracleConfig& config = {});

// Exhaustive scan over theta in {0, pi/4, pi/2, 3pi/4, pi} and
// phi in {2 pi j / 5 : j = 0..4} on every qubit, i.e. 25^n product states.
double coarse_grid_minimum(const Operator& w);

}  // namespace dickelab
