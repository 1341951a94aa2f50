#pragma once

// q2 sweeps of the noisy phased Dicke state and their CSV/JSON emission.

#include "dickelab/tensor.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dickelab {

enum class OutputFormat { kCsv, kJson };

struct SweepConfig {
  double q1 = 0.05;
  double q3 = 0.05;
  double q2_start = 0.0;
  double q2_stop = 0.5;
  int steps = 51;
  std::string output_path;  // empty: standard output
  OutputFormat format = OutputFormat::kCsv;
  std::uint64_t seed = 7;
  Validation validation = Validation::kCheck;

  // Throws std::invalid_argument for bounds outside [0, 1/2], start > stop,
  // or fewer than two steps.
  void validate() const;
  // Grid point i of steps, endpoints included.
  double q2_at(int i) const;
};

struct SweepRow {
  double q2;
  double sxx;
  double syy;
  double szz;
  double wbar_matrix;
  double wbar_closed_form;
  double wmult;
  double fidelity;
  double er_bound;

  friend bool operator==(const SweepRow&, const SweepRow&) = default;
};

struct SweepResult {
  std::vector<SweepRow> rows;
  // First sign change of wbar_matrix from negative to nonnegative, linearly
  // interpolated between the bracketing rows.
  std::optional<double> zero_crossing;
  double max_closed_form_deviation = 0.0;
  // Largest |wbar_matrix - (-0.455 + 2.333 q2 - 2.333 q2^2)|.
  double max_rounded_curve_deviation = 0.0;
};

SweepRow evaluate_row(double q1, double q2, double q3, Validation v = Validation::kCheck);
SweepResult run_sweep(const SweepConfig& config);

inline constexpr const char* kCsvHeader = "q2,sxx,syy,szz,wbar_matrix,wbar_closed_form,wmult,fidelity,er_bound";

// 17 significant digits with '.' as the separator regardless of locale, so
// parse_double(format_double(v)) == v.
std::string format_double(double v);
double parse_double(std::string_view text);

void write_csv(const std::vector<SweepRow>& rows, std::ostream& out);
// Throws std::runtime_error on a bad header or malformed row.
std::vector<SweepRow> read_csv(std::istream& in);

void write_json(const SweepResult& result, const SweepConfig& config, std::ostream& out);

// {"n_qubits": n, "entries": [[re, im], ...]} with 4^n row-major pairs.
// Rejects non-Hermitian input or trace deviating from 1 by more than 1e-8.
DensityMatrix read_density_matrix_json(std::istream& in);
void write_density_matrix_json(const DensityMatrix& rho, std::ostream& out);

}  // namespace dickelab
