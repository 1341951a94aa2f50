#include "dickelab/sweep.hpp"

#include "dickelab/circuits.hpp"
#include "dickelab/noise.hpp"
#include "dickelab/witness.hpp"

#include <json.hpp>

#include <charconv>
#include <cmath>
#include <istream>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace dickelab {

using nlohmann::json;

void SweepConfig::validate() const {
  auto in_range = [](double q) { return q >= 0.0 && q <= 0.5; };
  if (!in_range(q1) || !in_range(q3)) throw std::invalid_argument("q1 and q3 must lie in [0, 1/2]");
  if (!in_range(q2_start) || !in_range(q2_stop)) throw std::invalid_argument("q2 grid must lie in [0, 1/2]");
  if (q2_start > q2_stop) throw std::invalid_argument("q2 grid start exceeds stop");
  if (steps < 2) throw std::invalid_argument("q2 grid needs at least two steps");
}

double SweepConfig::q2_at(int i) const {
  if (i == steps - 1) return q2_stop;
  return q2_start + (q2_stop - q2_start) * static_cast<double>(i) / static_cast<double>(steps - 1);
}

namespace {

struct SweepOperators {
  Operator sxx = structure_factor(Axis::x, Axis::x, std::numbers::pi, 4);
  Operator syy = structure_factor(Axis::y, Axis::y, std::numbers::pi, 4);
  Operator szz = structure_factor(Axis::z, Axis::z, 0.0, 4);
  Operator wbar = wbar_witness();
  Operator wmult = multipartite_witness();
};

const SweepOperators& sweep_operators() {
  static const SweepOperators ops;
  return ops;
}

}  // namespace

SweepRow evaluate_row(double q1, double q2, double q3, Validation v) {
  const NoiseParams p{q1, q2, q3};
  const DensityMatrix rho = noisy_dicke_state(p, v);
  const auto& ops = sweep_operators();
  SweepRow row{};
  row.q2 = q2;
  row.sxx = expectation(rho, ops.sxx);
  row.syy = expectation(rho, ops.syy);
  row.szz = expectation(rho, ops.szz);
  row.wbar_matrix = expectation(rho, ops.wbar);
  row.wbar_closed_form = closed_form_expectations(p).wbar;
  row.wmult = expectation(rho, ops.wmult);
  row.fidelity = fidelity_with_pure(rho, phased_dicke4());
  row.er_bound = robustness_bound_from_value(row.wbar_matrix, ops.wbar).random_robustness_lower_bound;
  return row;
}

SweepResult run_sweep(const SweepConfig& config) {
  config.validate();
  SweepResult result;
  result.rows.reserve(static_cast<std::size_t>(config.steps));
  for (int i = 0; i < config.steps; ++i) {
    result.rows.push_back(evaluate_row(config.q1, config.q2_at(i), config.q3, config.validation));
  }
  for (std::size_t i = 0; i < result.rows.size(); ++i) {
    const SweepRow& r = result.rows[i];
    result.max_closed_form_deviation =
        std::max(result.max_closed_form_deviation, std::abs(r.wbar_matrix - r.wbar_closed_form));
    result.max_rounded_curve_deviation =
        std::max(result.max_rounded_curve_deviation, std::abs(r.wbar_matrix - rounded_wbar_curve(r.q2)));
    if (!result.zero_crossing && i > 0) {
      const SweepRow& prev = result.rows[i - 1];
      if (prev.wbar_matrix < 0.0 && r.wbar_matrix >= 0.0) {
        const double frac = -prev.wbar_matrix / (r.wbar_matrix - prev.wbar_matrix);
        result.zero_crossing = prev.q2 + frac * (r.q2 - prev.q2);
      }
    }
  }
  return result;
}

std::string format_double(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
  if (ec != std::errc()) throw std::runtime_error("failed to format number");
  return std::string(buf, end);
}

double parse_double(std::string_view text) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw std::runtime_error("malformed number '" + std::string(text) + "'");
  }
  return v;
}

void write_csv(const std::vector<SweepRow>& rows, std::ostream& out) {
  out << kCsvHeader << '\n';
  for (const auto& r : rows) {
    out << format_double(r.q2) << ',' << format_double(r.sxx) << ',' << format_double(r.syy) << ','
        << format_double(r.szz) << ',' << format_double(r.wbar_matrix) << ','
        << format_double(r.wbar_closed_form) << ',' << format_double(r.wmult) << ','
        << format_double(r.fidelity) << ',' << format_double(r.er_bound) << '\n';
  }
}

std::vector<SweepRow> read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader) throw std::runtime_error("missing or unexpected CSV header");
  std::vector<SweepRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<double> fields;
    std::string_view rest(line);
    while (true) {
      const auto comma = rest.find(',');
      fields.push_back(parse_double(rest.substr(0, comma)));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    if (fields.size() != 9) throw std::runtime_error("CSV row has " + std::to_string(fields.size()) + " fields");
    rows.push_back({fields[0], fields[1], fields[2], fields[3], fields[4], fields[5], fields[6], fields[7], fields[8]});
  }
  return rows;
}

void write_json(const SweepResult& result, const SweepConfig& config, std::ostream& out) {
  json doc;
  doc["config"] = {
      {"q1", config.q1},
      {"q3", config.q3},
      {"q2_grid", {{"start", config.q2_start}, {"stop", config.q2_stop}, {"steps", config.steps}}},
      {"seed", config.seed},
  };
  json rows = json::array();
  for (const auto& r : result.rows) {
    rows.push_back({{"q2", r.q2},
                    {"sxx", r.sxx},
                    {"syy", r.syy},
                    {"szz", r.szz},
                    {"wbar_matrix", r.wbar_matrix},
                    {"wbar_closed_form", r.wbar_closed_form},
                    {"wmult", r.wmult},
                    {"fidelity", r.fidelity},
                    {"er_bound", r.er_bound}});
  }
  doc["rows"] = std::move(rows);
  doc["zero_crossing"] = result.zero_crossing ? json(*result.zero_crossing) : json(nullptr);
  doc["max_closed_form_deviation"] = result.max_closed_form_deviation;
  doc["max_rounded_curve_deviation"] = result.max_rounded_curve_deviation;
  out << doc.dump(2) << '\n';
}

DensityMatrix read_density_matrix_json(std::istream& in) {
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw std::runtime_error(std::string("density matrix file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("n_qubits") || !doc.contains("entries")) {
    throw std::runtime_error("density matrix file needs n_qubits and entries");
  }
  if (!doc["n_qubits"].is_number_integer()) throw std::runtime_error("n_qubits must be an integer");
  const int n = doc["n_qubits"].get<int>();
  const auto d = static_cast<Eigen::Index>(dimension_of(n));
  const json& entries = doc["entries"];
  if (!entries.is_array() || entries.size() != static_cast<std::size_t>(d * d)) {
    throw std::runtime_error("entries must hold 4^n [re, im] pairs");
  }
  Matrix m(d, d);
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = 0; j < d; ++j) {
      const json& e = entries[static_cast<std::size_t>(i * d + j)];
      if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
        throw std::runtime_error("each entry must be a [re, im] pair");
      }
      m(i, j) = cplx(e[0].get<double>(), e[1].get<double>());
    }
  }
  constexpr double kFileTol = 1e-8;
  if (hermitian_deviation(m) > kFileTol) throw std::runtime_error("density matrix is not Hermitian");
  if (std::abs(m.trace() - 1.0) > kFileTol) throw std::runtime_error("density matrix trace is not 1");
  Matrix sym = (m + m.adjoint()) * 0.5;
  sym /= sym.trace().real();
  return DensityMatrix(std::move(sym));
}

void write_density_matrix_json(const DensityMatrix& rho, std::ostream& out) {
  json entries = json::array();
  const auto d = static_cast<Eigen::Index>(rho.dim());
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = 0; j < d; ++j) {
      entries.push_back({rho.entries()(i, j).real(), rho.entries()(i, j).imag()});
    }
  }
  out << json{{"n_qubits", rho.n_qubits()}, {"entries", std::move(entries)}}.dump() << '\n';
}

}  // namespace dickelab
