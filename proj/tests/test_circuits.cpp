#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dickelab/circuits.hpp"

#include <cmath>
#include <numbers>

using namespace dickelab;

namespace {
const double kA = 1.0 / std::sqrt(6.0);

double max_dev(const Vector& a, const Vector& b) { return (a - b).cwiseAbs().maxCoeff(); }
}  // namespace

TEST_CASE("phased_dicke4 amplitudes") {
  const StateVector d = phased_dicke4();
  CHECK(d.n_qubits() == 4);
  CHECK(d.amplitude("0011").real() == doctest::Approx(kA));
  CHECK(d.amplitude("1100").real() == doctest::Approx(kA));
  CHECK(d.amplitude("0101").real() == doctest::Approx(-kA));
  CHECK(d.amplitude("1010").real() == doctest::Approx(-kA));
  CHECK(d.amplitude("0000") == cplx(0.0));
}

TEST_CASE("xi_state amplitudes") {
  const StateVector xi = xi_state();
  CHECK(xi.amplitude("0111").real() == doctest::Approx(2.0 * kA));
  CHECK(xi.amplitude("1000").real() == doctest::Approx(-kA));
  CHECK(xi.amplitude("0010").real() == doctest::Approx(kA));
  CHECK(xi.amplitudes().squaredNorm() == doctest::Approx(1.0));
}

TEST_CASE("symmetric_dicke") {
  const StateVector d21 = symmetric_dicke(2, 1);
  CHECK(d21.amplitude("01").real() == doctest::Approx(1.0 / std::sqrt(2.0)));
  CHECK(d21.amplitude("10").real() == doctest::Approx(1.0 / std::sqrt(2.0)));
  CHECK(d21.amplitude("00") == cplx(0.0));

  CHECK(symmetric_dicke(4, 0).amplitude("0000").real() == doctest::Approx(1.0));

  SUBCASE("D(4,2) differs from the phased state exactly on |0101> and |1010>") {
    const StateVector sym = symmetric_dicke(4, 2);
    const StateVector ph = phased_dicke4();
    int sign_flips = 0;
    for (std::size_t i = 0; i < 16; ++i) {
      CHECK(std::norm(sym[i]) == doctest::Approx(std::norm(ph[i])));
      if (std::abs(sym[i] + ph[i]) < 1e-15 && std::abs(sym[i]) > 0.0) {
        ++sign_flips;
        CHECK((i == 0b0101 || i == 0b1010));
      }
    }
    CHECK(sign_flips == 2);
  }

  CHECK_THROWS_AS(symmetric_dicke(4, 5), std::invalid_argument);
  CHECK_THROWS_AS(symmetric_dicke(4, -1), std::invalid_argument);
  CHECK_THROWS_AS(symmetric_dicke(0, 0), std::invalid_argument);
}

TEST_CASE("gate definitions") {
  SUBCASE("CZbar fires on a |0> control") {
    const Operator czb = gate_operator({GateKind::CZbar, 2, 1}, 2);
    const Vector expected = Vector::Map(std::vector<cplx>{1, -1, 1, 1}.data(), 4);
    CHECK(max_dev(czb.matrix().diagonal(), expected) == 0.0);
  }
  SUBCASE("CX flips the target on a |1> control") {
    const Operator cx = gate_operator({GateKind::CX, 2, 1}, 2);
    CHECK((cx * StateVector::basis("10")).amplitude("11") == cplx(1.0));
    CHECK((cx * StateVector::basis("00")).amplitude("00") == cplx(1.0));
  }
  SUBCASE("invalid specs") {
    CHECK_THROWS_AS(validate_gate({GateKind::CX, 2, {}}, 4), std::invalid_argument);
    CHECK_THROWS_AS(validate_gate({GateKind::CX, 2, 2}, 4), std::invalid_argument);
    CHECK_THROWS_AS(validate_gate({GateKind::H, 5, {}}, 4), std::invalid_argument);
    CHECK_THROWS_AS(validate_gate({GateKind::H, 1, 2}, 4), std::invalid_argument);
    CHECK_THROWS_AS(validate_gate({GateKind::CZbar, 1, 0}, 4), std::invalid_argument);
  }
}

TEST_CASE("dicke_transform maps xi to the phased Dicke state") {
  const Operator u = dicke_transform();
  CHECK(u.is_unitary(1e-10));
  CHECK(max_dev(u.matrix() * xi_state().amplitudes(), phased_dicke4().amplitudes()) <= 1e-12);
  CHECK((u.matrix() * u.matrix().adjoint() - Matrix::Identity(16, 16)).cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("dicke_transform_variant agrees up to a reported global phase") {
  const VariantTransform v = dicke_transform_variant();
  CHECK(v.unitary.is_unitary(1e-10));
  CHECK(std::abs(std::abs(v.global_phase) - 1.0) <= 1e-12);
  const Vector phased = v.global_phase * phased_dicke4().amplitudes();
  CHECK(max_dev(v.unitary.matrix() * xi_state().amplitudes(), phased) <= 1e-12);
  // Measured, not assumed: the variant lands on -|D4ph>.
  CHECK(v.global_phase.real() == doctest::Approx(-1.0));
}

TEST_CASE("conjugate_pauli") {
  const Operator u = dicke_transform();
  CHECK(conjugate_pauli(u, PauliString::parse("ZIII")) == PauliString::parse("-YYII"));
  CHECK(conjugate_pauli(u, PauliString::parse("IZII")) == PauliString::parse("ZZII"));
  CHECK(conjugate_pauli(u, PauliString::parse("IIZI")) == PauliString::parse("IIYY"));
  CHECK(conjugate_pauli(u, PauliString::parse("ZIZI")) == PauliString::parse("-YYYY"));
  CHECK(conjugate_pauli(Operator::identity(4), PauliString::parse("IIZI")) == PauliString::parse("IIZI"));
  CHECK(conjugate_pauli_checked(u, PauliString::parse("ZIII")).residual <= 1e-10);

  SUBCASE("non-Pauli image is rejected") {
    // H maps Z to X, but a rotation by pi/8 leaves a mixture of Z and X.
    const double c = std::cos(std::numbers::pi / 8);
    const double s = std::sin(std::numbers::pi / 8);
    Matrix r(2, 2);
    r << c, -s, s, c;
    CHECK_THROWS_AS(conjugate_pauli(Operator::from_matrix(r), PauliString::parse("Z")), std::runtime_error);
  }
  SUBCASE("mismatched sizes") {
    CHECK_THROWS_AS(conjugate_pauli(u, PauliString::parse("Z")), std::invalid_argument);
  }
}

TEST_CASE("circuit_unitary composes in application order") {
  // X then H on |0> gives |->, while H then X gives |+>.
  const Operator xh = circuit_unitary({1, {{GateKind::X, 1, {}}, {GateKind::H, 1, {}}}});
  const StateVector minus = xh * StateVector::basis("0");
  CHECK(minus[1].real() == doctest::Approx(-1.0 / std::sqrt(2.0)));
  const Operator hx = circuit_unitary({1, {{GateKind::H, 1, {}}, {GateKind::X, 1, {}}}});
  CHECK((hx * StateVector::basis("0"))[1].real() == doctest::Approx(1.0 / std::sqrt(2.0)));
}
