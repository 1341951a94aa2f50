#pragma once

// Decoherence channels of the phased-Dicke setup and the visibility
// calibration maps. Every parameter lives in [0, 1/2]: 0 is the identity
// channel and 1/2 full dephasing.

#include "dickelab/kraus.hpp"

namespace dickelab {

struct NoiseParams {
  double q1 = 0.0;  // polarization dephasing
  double q2 = 0.0;  // path delay dephasing
  double q3 = 0.0;  // second beam-splitter interference

  // Throws std::invalid_argument if any parameter leaves [0, 1/2].
  void validate() const;
};

// Frame in which a channel is written: the source state |xi> or the phased
// Dicke state reached through dicke_transform().
enum class Frame { kXi, kDicke };

// (1-q2)^2 rho + q2(1-q2)[Z1 rho Z1 + Z3 rho Z3] + q2^2 Z1Z3 rho Z1Z3,
// acting on |xi>.
KrausChannel path_dephasing_channel(double q2);

// {(1-q2) 1, sqrt(q2(1-q2)) Y1Y2, sqrt(q2(1-q2)) Y3Y4, q2 Y1Y2Y3Y4}; the
// path dephasing channel seen from the Dicke frame.
KrausChannel collective_channel(double q2);

// {sqrt(1-q1) 1, sqrt(q1) Z2} in the xi frame, {sqrt(1-q1) 1, sqrt(q1) Z1Z2}
// in the Dicke frame.
KrausChannel polarization_channel(double q1, Frame frame = Frame::kDicke);

// {(1-q3) 1, sqrt(q3(1-q3)) Z1, sqrt(q3(1-q3)) Z3, q3 Z1Z3}.
KrausChannel second_bs_channel(double q3);

// Polarization (Dicke frame), then collective, then second-BS noise applied
// to |D4ph><D4ph|.
DensityMatrix noisy_dicke_state(const NoiseParams& p, Validation v = Validation::kCheck);

// Visibility to dephasing parameter. Path and BS visibilities obey
// V = (1 - 2q)^2, polarization visibility obeys V = 1 - 2q.
double q2_from_path_visibility(double v);
double q1_from_pol_visibility(double v);
double q3_from_bs_visibility(double v);

}  // namespace dickelab
