#pragma once

// Builders for the source state |xi>, the phased Dicke state, generic
// symmetric Dicke states, and the gate sequence that maps one to the other.

#include "dickelab/tensor.hpp"

#include <optional>
#include <vector>

namespace dickelab {

// CZbar is the controlled-Z that fires when the control is |0>:
//   CZbar_ij = |1><1|_i (x) 1_j + |0><0|_i (x) Z_j
// and is not the textbook CZ.
enum class GateKind { H, X, Z, CX, CZbar };

struct GateSpec {
  GateKind kind;
  int target;                  // 1-based
  std::optional<int> control;  // required for CX and CZbar
};

// Gates are stored in application order: gates.front() acts on the ket first.
struct CircuitSpec {
  int n_qubits;
  std::vector<GateSpec> gates;
};

// Throws std::invalid_argument for out-of-range indices, a missing or
// superfluous control, or control == target.
void validate_gate(const GateSpec& g, int n_qubits);

Operator gate_operator(const GateSpec& g, int n_qubits);

// Product of all gate operators (last gate leftmost). Throws
// std::runtime_error if the result is not unitary within 1e-10.
Operator circuit_unitary(const CircuitSpec& c);

// (|0011> + |1100> + |0110> + |1001> - |0101> - |1010>) / sqrt(6)
StateVector phased_dicke4();

// (|0010> - |1000> + 2|0111>) / sqrt(6)
StateVector xi_state();

// Equal-weight superposition of all n-bit strings of Hamming weight k.
StateVector symmetric_dicke(int n, int k_excitations);

// Z_4 CZbar_12 CZbar_34 CX_12 CX_34 H_1 H_3, listed in application order.
CircuitSpec dicke_transform_circuit();
// Z_1 CX_12 CX_34 H_1 H_3, listed in application order.
CircuitSpec dicke_transform_variant_circuit();

// Unitary U with U |xi> = |D4ph> exactly.
Operator dicke_transform();

struct VariantTransform {
  Operator unitary;
  // <D4ph| U' |xi>; the variant reproduces |D4ph> only up to this phase.
  cplx global_phase;
};

VariantTransform dicke_transform_variant();

struct PauliDecomposition {
  PauliString pauli;
  double residual;  // Frobenius norm of the part outside the matched string, per sqrt(2^n)
};

// Expresses u p u^dagger as a single phased Pauli string by projecting onto
// the Pauli basis with <P, M> = Tr(P^dagger M) / 2^n. Throws
// std::runtime_error when the off-basis residual exceeds 1e-10 or no
// coefficient is a unit phase.
PauliDecomposition conjugate_pauli_checked(const Operator& u, const PauliString& p);
PauliString conjugate_pauli(const Operator& u, const PauliString& p);

}  // namespace dickelab
