#include "dickelab/noise.hpp"

#include "dickelab/circuits.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <string_view>

namespace dickelab {

namespace {

void require_dephasing_param(double q, std::string_view name) {
  if (!(q >= 0.0 && q <= 0.5)) {
    throw std::invalid_argument(std::string(name) + " must lie in [0, 1/2], got " + std::to_string(q));
  }
}

void require_visibility(double v) {
  if (!(v >= 0.0 && v <= 1.0)) {
    throw std::invalid_argument("visibility must lie in [0, 1], got " + std::to_string(v));
  }
}

Operator pauli(std::string_view labels) { return pauli_string_to_operator(PauliString::parse(labels)); }

// Two independent Z dephasings with common strength q on the given pair.
KrausChannel double_dephasing(double q, std::string_view a, std::string_view b, std::string_view ab) {
  const double cross = std::sqrt(q * (1.0 - q));
  return KrausChannel(4, {(1.0 - q) * Operator::identity(4), cross * pauli(a), cross * pauli(b), q * pauli(ab)});
}

}  // namespace

void NoiseParams::validate() const {
  require_dephasing_param(q1, "q1");
  require_dephasing_param(q2, "q2");
  require_dephasing_param(q3, "q3");
}

KrausChannel path_dephasing_channel(double q2) {
  require_dephasing_param(q2, "q2");
  return double_dephasing(q2, "ZIII", "IIZI", "ZIZI");
}

KrausChannel collective_channel(double q2) {
  require_dephasing_param(q2, "q2");
  return double_dephasing(q2, "YYII", "IIYY", "YYYY");
}

KrausChannel polarization_channel(double q1, Frame frame) {
  require_dephasing_param(q1, "q1");
  const std::string_view flip = frame == Frame::kXi ? "IZII" : "ZZII";
  return KrausChannel(4, {std::sqrt(1.0 - q1) * Operator::identity(4), std::sqrt(q1) * pauli(flip)});
}

KrausChannel second_bs_channel(double q3) {
  require_dephasing_param(q3, "q3");
  return double_dephasing(q3, "ZIII", "IIZI", "ZIZI");
}

DensityMatrix noisy_dicke_state(const NoiseParams& p, Validation v) {
  p.validate();
  DensityMatrix rho(phased_dicke4());
  rho = apply_channel(rho, polarization_channel(p.q1, Frame::kDicke), v);
  rho = apply_channel(rho, collective_channel(p.q2), v);
  rho = apply_channel(rho, second_bs_channel(p.q3), v);
  return rho;
}

double q2_from_path_visibility(double v) {
  require_visibility(v);
  return 0.5 * (1.0 - std::sqrt(v));
}

double q1_from_pol_visibility(double v) {
  require_visibility(v);
  return 0.5 * (1.0 - v);
}

double q3_from_bs_visibility(double v) {
  require_visibility(v);
  return 0.5 * (1.0 - std::sqrt(v));
}

}  // namespace dickelab
