#pragma once

// Command-line front end. Exit codes: 0 success or entanglement detected,
// 1 not detected or oracle failure, 2 usage or I/O error.

#include "dickelab/sep_oracle.hpp"
#include "dickelab/sweep.hpp"
#include "dickelab/witness.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace dickelab {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitError = 2;

// Builtin witnesses: wbar, w-pi, wmult, identity, neg-identity, and
// gen:cx,cy,cz,kx,ky,kz for an arbitrary four-qubit generalized witness.
// Throws std::invalid_argument for unknown names.
Operator witness_by_name(const std::string& name);

// Builtin states: dicke4, xi, maximally-mixed, dicke4-noisy (uses `noise`).
// Any other name is read as a density-matrix JSON file.
DensityMatrix state_by_name(const std::string& name, const NoiseParams& noise);

int cmd_sweep(const SweepConfig& config, std::ostream& out, std::ostream& err);
int cmd_witness(const std::string& state, const std::string& witness, const NoiseParams& noise,
                OutputFormat format, const std::string& output_path, std::ostream& out, std::ostream& err);
int cmd_oracle(const std::string& witness, const OracleConfig& config, OutputFormat format,
               const std::string& output_path, std::ostream& out, std::ostream& err);
int cmd_calibrate(const std::string& kind, double v, std::ostream& out, std::ostream& err);

// Parses argv (argv[0] is the program name) and dispatches.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dickelab
