#include "dickelab/witness.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace dickelab {

namespace {

Pauli axis_pauli(Axis a) {
  switch (a) {
    case Axis::x: return Pauli::X;
    case Axis::y: return Pauli::Y;
    case Axis::z: return Pauli::Z;
  }
  throw std::invalid_argument("invalid axis");
}

// S_i^a S_j^b as a dense matrix, qubits 1-based.
Matrix two_site(Axis a, int i, Axis b, int j, int n) {
  std::vector<Pauli> labels(static_cast<std::size_t>(n), Pauli::I);
  labels[static_cast<std::size_t>(i - 1)] = axis_pauli(a);
  labels[static_cast<std::size_t>(j - 1)] = axis_pauli(b);
  return pauli_string_to_operator(PauliString(std::move(labels))).matrix();
}

long long binomial2(int n) { return static_cast<long long>(n) * (n - 1) / 2; }

void require_coefficients(const std::array<double, 3>& c) {
  for (double v : c) {
    if (!(std::abs(v) <= 1.0)) {
      throw std::invalid_argument("witness coefficient must satisfy |c| <= 1, got " + std::to_string(v));
    }
  }
}

}  // namespace

void WitnessSpec::validate() const {
  if (n_qubits < 2) throw std::invalid_argument("witness needs at least two qubits");
  dimension_of(n_qubits);
  require_coefficients(c);
}

Operator structure_factor(Axis alpha, Axis beta, double k, int n, Symmetrization sym) {
  if (n < 2) throw std::invalid_argument("structure factor needs at least two qubits");
  const auto d = static_cast<Eigen::Index>(dimension_of(n));
  Matrix s = Matrix::Zero(d, d);
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      const double arg = k * static_cast<double>(i - j);
      const cplx weight = sym == Symmetrization::kSymmetrized ? cplx(std::cos(arg), 0.0) : std::polar(1.0, arg);
      s += weight * two_site(alpha, i, beta, j, n);
    }
  }
  return Operator::from_matrix(std::move(s));
}

Operator generalized_witness(double kx, double ky, double kz, const std::array<double, 3>& c, int n) {
  WitnessSpec{n, c, {kx, ky, kz}}.validate();
  const Operator sxx = structure_factor(Axis::x, Axis::x, kx, n);
  const Operator syy = structure_factor(Axis::y, Axis::y, ky, n);
  const Operator szz = structure_factor(Axis::z, Axis::z, kz, n);
  const double norm = 1.0 / static_cast<double>(binomial2(n));
  return Operator::identity(n) - (norm * (c[0] * sxx + c[1] * syy + c[2] * szz));
}

Operator generalized_witness(const WitnessSpec& spec) {
  return generalized_witness(spec.k[0], spec.k[1], spec.k[2], spec.c, spec.n_qubits);
}

Operator structural_witness(double k, const std::array<double, 3>& c, int n) {
  return generalized_witness(k, k, k, c, n);
}

Operator w_pi_witness(int n) { return structural_witness(std::numbers::pi, {1.0, 1.0, 1.0}, n); }

Operator wbar_witness() {
  return generalized_witness(std::numbers::pi, std::numbers::pi, 0.0, {1.0, 1.0, -1.0}, 4);
}

Operator multipartite_witness() {
  constexpr double pi = std::numbers::pi;
  const Operator sxx = structure_factor(Axis::x, Axis::x, pi, 4);
  const Operator syy = structure_factor(Axis::y, Axis::y, pi, 4);
  const Operator szz = structure_factor(Axis::z, Axis::z, 0.0, 4);
  const Operator xxxx = pauli_string_to_operator(PauliString::parse("XXXX"));
  const Operator yyyy = pauli_string_to_operator(PauliString::parse("YYYY"));
  const Operator zzzz = pauli_string_to_operator(PauliString::parse("ZZZZ"));
  const Operator sum = 21.0 * Operator::identity(4) - 2.0 * sxx - 2.0 * syy + szz - 2.0 * xxxx -
                       2.0 * yyyy - 7.0 * zzzz;
  return 0.125 * sum;
}

double fidelity_bound(double wmult_value) { return 2.0 / 3.0 - wmult_value / 3.0; }

BoundReport robustness_bound_from_value(double witness_value, const Operator& w) {
  if (!w.is_hermitian()) throw std::invalid_argument("witness is not Hermitian");
  const double tr = w.trace().real();
  if (!(tr > 0.0)) throw std::invalid_argument("witness trace must be positive, got " + std::to_string(tr));
  BoundReport r;
  r.witness_value = witness_value;
  r.trace_of_witness = tr;
  r.dimension = w.dim();
  r.random_robustness_lower_bound =
      witness_value < 0.0 ? static_cast<double>(r.dimension) * std::abs(witness_value) / tr : 0.0;
  return r;
}

BoundReport robustness_bound(const DensityMatrix& rho, const Operator& w) {
  return robustness_bound_from_value(expectation(rho, w), w);
}

ClosedFormExpectations closed_form_expectations(const NoiseParams& p) {
  p.validate();
  const double q1 = p.q1;
  const double q2 = p.q2;
  const double q3 = p.q3;
  const double keep3 = (1.0 - q3) * (1.0 - q3);
  const double bs_loss = (8.0 / 3.0) * q3 * (3.0 - q3);
  const double path = (1.0 - 2.0 * q2) * (1.0 - 2.0 * q2);

  ClosedFormExpectations out{};
  out.sxx = 4.0 - bs_loss - (16.0 / 3.0) * keep3 * (q1 * path + 2.0 * q2 * (1.0 - q2));
  // The bracketing here is the reading that agrees with the
  // channel-level computation and reduces to sxx at q2 = 0.
  out.syy = 4.0 - (16.0 / 3.0) * q1 * keep3 - bs_loss;
  out.szz = -2.0 + (16.0 / 3.0) * q2 * (1.0 - q2);
  out.wbar = 1.0 - (out.sxx + out.syy - out.szz) / 6.0;
  return out;
}

double rounded_wbar_curve(double q2) { return -0.455 + 2.333 * q2 - 2.333 * q2 * q2; }

}  // namespace dickelab
