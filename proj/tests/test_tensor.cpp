#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bit_oracle.hpp"
#include "dickelab/circuits.hpp"
#include "dickelab/kraus.hpp"
#include "dickelab/noise.hpp"
#include "dickelab/witness.hpp"

#include <random>

using namespace dickelab;

namespace {

Matrix random_hermitian(std::mt19937_64& rng, Eigen::Index d) {
  std::normal_distribution<double> g;
  Matrix a(d, d);
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = 0; j < d; ++j) a(i, j) = cplx(g(rng), g(rng));
  return (a + a.adjoint()) * 0.5;
}

DensityMatrix random_density(std::mt19937_64& rng, Eigen::Index d) {
  std::normal_distribution<double> g;
  Matrix a(d, d);
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = 0; j < d; ++j) a(i, j) = cplx(g(rng), g(rng));
  Matrix rho = a * a.adjoint();
  rho /= rho.trace().real();
  return DensityMatrix((rho + rho.adjoint()) * 0.5);
}

StateVector random_state(std::mt19937_64& rng, Eigen::Index d) {
  std::normal_distribution<double> g;
  Vector v(d);
  for (Eigen::Index i = 0; i < d; ++i) v(i) = cplx(g(rng), g(rng));
  return StateVector::normalized(v);
}

std::string random_labels(std::mt19937_64& rng, int n) {
  static constexpr char kLabels[] = {'I', 'X', 'Y', 'Z'};
  std::uniform_int_distribution<int> pick(0, 3);
  std::string s;
  for (int i = 0; i < n; ++i) s.push_back(kLabels[pick(rng)]);
  return s;
}

}  // namespace

TEST_CASE("basis ordering puts qubit 1 in the most significant bit") {
  const StateVector s = StateVector::basis("1000");
  CHECK(s[8] == cplx(1.0));
  CHECK(s.amplitude("1000") == cplx(1.0));
  const Operator z1 = pauli_string_to_operator(PauliString::parse("ZIII"));
  CHECK(expectation(s, z1) == doctest::Approx(-1.0));
}

TEST_CASE("state vector rejects bad input") {
  CHECK_THROWS_AS(StateVector(Vector::Ones(16)), std::invalid_argument);
  CHECK_THROWS_AS(StateVector(Vector::Zero(3)), std::invalid_argument);
  CHECK_THROWS_AS(StateVector::basis("01a0"), std::invalid_argument);
  CHECK_THROWS_AS(StateVector::normalized(Vector::Zero(4)), std::invalid_argument);
  CHECK_THROWS_AS(StateVector::basis("010101010"), std::invalid_argument);  // 9 qubits
}

TEST_CASE("density matrix invariants are enforced unless skipped") {
  Matrix bad = Matrix::Identity(4, 4) * 0.5;
  CHECK_THROWS_AS(DensityMatrix{bad}, std::runtime_error);
  CHECK_NOTHROW(DensityMatrix(bad, Validation::kSkip));

  Matrix negative = Matrix::Zero(2, 2);
  negative(0, 0) = 1.5;
  negative(1, 1) = -0.5;
  CHECK_THROWS_AS(DensityMatrix{negative}, std::runtime_error);

  Matrix skew = Matrix::Identity(2, 2) * 0.5;
  skew(0, 1) = cplx(0.0, 0.1);
  CHECK_THROWS_AS(DensityMatrix{skew}, std::runtime_error);
}

TEST_CASE("pauli_string_to_operator") {
  SUBCASE("identity string") {
    const Operator id = pauli_string_to_operator(PauliString::parse("IIII"));
    CHECK(id.dim() == 16);
    CHECK((id.matrix() - Matrix::Identity(16, 16)).cwiseAbs().maxCoeff() == 0.0);
    CHECK(id.is_hermitian());
  }
  SUBCASE("eigenstate expectation") {
    CHECK(expectation(StateVector::basis("0000"), pauli_string_to_operator(PauliString::parse("ZIII"))) == 1.0);
  }
  SUBCASE("pair correlator on the phased Dicke state") {
    const auto psi = phased_dicke4();
    const double oracle = bit_oracle::expect(bit_oracle::phased_dicke4(), "ZZII");
    CHECK(oracle == doctest::Approx(-1.0 / 3.0).epsilon(1e-14));
    CHECK(expectation(psi, pauli_string_to_operator(PauliString::parse("ZZII"))) ==
          doctest::Approx(-1.0 / 3.0).epsilon(1e-14));
  }
  SUBCASE("imaginary phase clears the Hermitian flag") {
    const Operator op = pauli_string_to_operator(PauliString::parse("iXZ"));
    CHECK_FALSE(op.is_hermitian());
    CHECK(op.is_unitary());
    CHECK_THROWS_AS(expectation(StateVector::basis("00"), op), std::invalid_argument);
  }
}

TEST_CASE("PauliString parsing and formatting") {
  CHECK(PauliString::parse("-YYII").to_string() == "-YYII");
  CHECK(PauliString::parse("+ZZ").phase_power() == 0);
  CHECK(PauliString::parse("-iX").phase() == cplx(0, -1));
  CHECK(PauliString::parse("iX").to_string() == "+iX");
  CHECK(PauliString::single(4, 3, Pauli::Y) == PauliString::parse("IIYI"));
  CHECK_THROWS_AS(PauliString::parse("XQ"), std::invalid_argument);
  CHECK_THROWS_AS(PauliString::single(4, 5, Pauli::Z), std::invalid_argument);
}

TEST_CASE("property: Pauli strings match the bit-mask oracle and square to the identity") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 64; ++trial) {
    const int n = 1 + trial % 5;
    const std::string labels = random_labels(rng, n);
    const Operator p = pauli_string_to_operator(PauliString::parse(labels));
    CHECK(p.is_unitary(1e-12));
    CHECK((p.matrix() * p.matrix() - Matrix::Identity(p.matrix().rows(), p.matrix().cols())).cwiseAbs().maxCoeff() <
          1e-14);
    const StateVector psi = random_state(rng, static_cast<Eigen::Index>(p.dim()));
    bit_oracle::Amplitudes amps(psi.amplitudes().data(), psi.amplitudes().data() + psi.dim());
    CHECK(expectation(psi, p) == doctest::Approx(bit_oracle::expect(amps, labels)).epsilon(1e-12));
  }
}

TEST_CASE("property: tensor product of unitaries is unitary") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 16; ++trial) {
    Eigen::HouseholderQR<Matrix> qa(random_hermitian(rng, 2) + cplx(0, 1) * random_hermitian(rng, 2));
    Eigen::HouseholderQR<Matrix> qb(random_hermitian(rng, 4) + cplx(0, 1) * random_hermitian(rng, 4));
    const Matrix ua = qa.householderQ();
    const Matrix ub = qb.householderQ();
    CHECK(Operator::from_matrix(kron(ua, ub)).is_unitary(1e-12));
  }
}

TEST_CASE("expectation") {
  CHECK(expectation(DensityMatrix(StateVector::basis("0000")), pauli_string_to_operator(PauliString::parse("ZIII"))) ==
        1.0);
  const DensityMatrix d4(phased_dicke4());
  CHECK(expectation(d4, w_pi_witness()) == doctest::Approx(-4.0 / 9.0).epsilon(1e-12));
  CHECK(expectation(d4, wbar_witness()) == doctest::Approx(-2.0 / 3.0).epsilon(1e-12));

  SUBCASE("dimension mismatch") {
    CHECK_THROWS_AS(expectation(StateVector::basis("00"), Operator::identity(3)), std::invalid_argument);
    CHECK_THROWS_AS(expectation(d4, Operator::identity(3)), std::invalid_argument);
  }
  SUBCASE("non-Hermitian observable") {
    Matrix m = Matrix::Zero(2, 2);
    m(0, 1) = 1.0;
    CHECK_THROWS_AS(expectation(StateVector::basis("0"), Operator::from_matrix(m)), std::invalid_argument);
  }
}

TEST_CASE("property: expectation is linear in the observable") {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> coef(-3.0, 3.0);
  for (int trial = 0; trial < 32; ++trial) {
    const DensityMatrix rho = random_density(rng, 8);
    const Operator a = Operator::from_matrix(random_hermitian(rng, 8));
    const Operator b = Operator::from_matrix(random_hermitian(rng, 8));
    const double x = coef(rng);
    const double y = coef(rng);
    const double lhs = expectation(rho, x * a + y * b);
    const double rhs = x * expectation(rho, a) + y * expectation(rho, b);
    CHECK(std::abs(lhs - rhs) <= 1e-10);
  }
}

TEST_CASE("apply_channel") {
  std::mt19937_64 rng(3);
  SUBCASE("identity channel leaves any state unchanged") {
    const DensityMatrix rho = random_density(rng, 16);
    const DensityMatrix out = apply_channel(rho, KrausChannel::identity(4));
    CHECK((out.entries() - rho.entries()).cwiseAbs().maxCoeff() < 1e-15);
  }
  SUBCASE("full path dephasing erases the |rl>/|lr> coherence of qubits 1 and 3") {
    // |psi-> on path qubits (1, 3), polarization qubits 2 and 4 in |0>
    Vector v = Vector::Zero(16);
    v(0b0010) = 1.0 / std::sqrt(2.0);   // |r l> with r = 0 on qubit 1, l = 1 on qubit 3
    v(0b1000) = -1.0 / std::sqrt(2.0);  // |l r>
    const DensityMatrix rho(StateVector{v});
    const DensityMatrix out = apply_channel(rho, path_dephasing_channel(0.5));
    CHECK(std::abs(out.entries()(0b0010, 0b1000)) < 1e-15);
    CHECK(out.entries()(0b0010, 0b0010).real() == doctest::Approx(0.5));

    const DensityMatrix partial = apply_channel(rho, path_dephasing_channel(0.1));
    CHECK(partial.entries()(0b0010, 0b1000).real() == doctest::Approx(-0.5 * 0.8 * 0.8).epsilon(1e-14));
  }
  SUBCASE("collective channel reproduces the S_zz(0) curve") {
    const double q2 = 0.1;
    const DensityMatrix out = apply_channel(DensityMatrix(phased_dicke4()), collective_channel(q2));
    const double formula = -2.0 + (16.0 / 3.0) * q2 * (1.0 - q2);
    CHECK(formula == doctest::Approx(-1.52).epsilon(1e-14));
    CHECK(expectation(out, structure_factor(Axis::z, Axis::z, 0.0, 4)) == doctest::Approx(formula).epsilon(1e-12));
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(apply_channel(random_density(rng, 4), KrausChannel::identity(4)), std::invalid_argument);
    CHECK_THROWS_AS(KrausChannel(2, {0.5 * Operator::identity(2)}), std::runtime_error);
    CHECK_THROWS_AS(KrausChannel(2, {}), std::invalid_argument);
    CHECK_THROWS_AS(KrausChannel(2, {Operator::identity(3)}), std::invalid_argument);
  }
}

TEST_CASE("property: channels preserve trace and Hermiticity") {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> q(0.0, 0.5);
  for (int trial = 0; trial < 20; ++trial) {
    const DensityMatrix rho = random_density(rng, 16);
    for (const KrausChannel& ch : {path_dephasing_channel(q(rng)), collective_channel(q(rng)),
                                   polarization_channel(q(rng)), second_bs_channel(q(rng))}) {
      const DensityMatrix out = apply_channel(rho, ch);
      CHECK(std::abs(out.trace() - 1.0) <= 1e-10);
      CHECK(hermitian_deviation(out.entries()) == 0.0);
      CHECK(out.min_eigenvalue() >= -1e-10);
    }
  }
}

TEST_CASE("fidelity_with_pure") {
  std::mt19937_64 rng(13);
  const StateVector psi = random_state(rng, 16);
  CHECK(fidelity_with_pure(DensityMatrix(psi), psi) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(fidelity_with_pure(DensityMatrix::maximally_mixed(4), psi) == doctest::Approx(1.0 / 16.0).epsilon(1e-14));
  CHECK_THROWS_AS(fidelity_with_pure(DensityMatrix::maximally_mixed(3), psi), std::invalid_argument);

  SUBCASE("noisy state fidelity dominates the W_mult bound") {
    const DensityMatrix rho = noisy_dicke_state({0.05, 0.0175, 0.05});
    const double f = fidelity_with_pure(rho, phased_dicke4());
    CHECK(f > 0.0);
    CHECK(f < 1.0);
    CHECK(fidelity_bound(expectation(rho, multipartite_witness())) <= f);
  }

  SUBCASE("property: pure-state fidelity is the squared overlap") {
    for (int trial = 0; trial < 32; ++trial) {
      const StateVector a = random_state(rng, 8);
      const StateVector b = random_state(rng, 8);
      const double overlap = std::norm(b.amplitudes().dot(a.amplitudes()));
      CHECK(std::abs(fidelity_with_pure(DensityMatrix(a), b) - overlap) < 1e-14);
    }
  }
}

TEST_CASE("Choi matrix distinguishes channels") {
  const Matrix a = choi_matrix(path_dephasing_channel(0.2));
  const Matrix b = choi_matrix(path_dephasing_channel(0.2).conjugated_by(Operator::identity(4)));
  CHECK((a - b).cwiseAbs().maxCoeff() < 1e-15);
  CHECK((a - choi_matrix(path_dephasing_channel(0.1))).cwiseAbs().maxCoeff() > 1e-3);
  CHECK(a.trace().real() == doctest::Approx(16.0));
}
