#include "dickelab/commands.hpp"

#include "dickelab/circuits.hpp"
#include "dickelab/noise.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace dickelab {

using nlohmann::json;

namespace {

// Writes `text` to `path`, or to `out` when the path is empty.
void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw std::ios_base::failure("cannot open output file '" + path + "'");
  file << text;
  file.close();
  if (!file) throw std::ios_base::failure("failed writing output file '" + path + "'");
}

std::string optional_number(const std::optional<double>& v) { return v ? format_double(*v) : "none"; }

Operator parse_generalized(const std::string& spec) {
  std::vector<double> values;
  std::string_view rest(spec);
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    values.push_back(parse_double(rest.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  if (values.size() != 6) throw std::invalid_argument("gen: witness needs cx,cy,cz,kx,ky,kz");
  return generalized_witness(values[3], values[4], values[5], {values[0], values[1], values[2]}, 4);
}

}  // namespace

Operator witness_by_name(const std::string& name) {
  if (name == "wbar") return wbar_witness();
  if (name == "w-pi") return w_pi_witness(4);
  if (name == "wmult") return multipartite_witness();
  if (name == "identity") return Operator::identity(4);
  if (name == "neg-identity") return -Operator::identity(4);
  if (name.rfind("gen:", 0) == 0) {
    try {
      return parse_generalized(name.substr(4));
    } catch (const std::runtime_error& e) {
      throw std::invalid_argument(e.what());
    }
  }
  throw std::invalid_argument("unknown witness '" + name + "'");
}

DensityMatrix state_by_name(const std::string& name, const NoiseParams& noise) {
  if (name == "dicke4") return DensityMatrix(phased_dicke4());
  if (name == "xi") return DensityMatrix(xi_state());
  if (name == "maximally-mixed") return DensityMatrix::maximally_mixed(4);
  if (name == "dicke4-noisy") return noisy_dicke_state(noise);
  std::ifstream file(name);
  if (!file) throw std::invalid_argument("unknown state '" + name + "' (not a builtin and not a readable file)");
  return read_density_matrix_json(file);
}

int cmd_sweep(const SweepConfig& config, std::ostream& out, std::ostream& err) {
  const SweepResult result = run_sweep(config);
  std::ostringstream data;
  if (config.format == OutputFormat::kCsv) {
    write_csv(result.rows, data);
  } else {
    write_json(result, config, data);
  }
  emit(data.str(), config.output_path, out);

  std::ostream& summary = config.output_path.empty() ? err : out;
  summary << "rows: " << result.rows.size() << '\n'
          << "zero_crossing_q2: " << optional_number(result.zero_crossing) << '\n'
          << "max_closed_form_deviation: " << format_double(result.max_closed_form_deviation) << '\n'
          << "max_rounded_curve_deviation: " << format_double(result.max_rounded_curve_deviation) << '\n';
  return kExitOk;
}

int cmd_witness(const std::string& state, const std::string& witness, const NoiseParams& noise,
                OutputFormat format, const std::string& output_path, std::ostream& out, std::ostream&) {
  const Operator w = witness_by_name(witness);
  const DensityMatrix rho = state_by_name(state, noise);
  if (rho.n_qubits() != w.n_qubits()) throw std::invalid_argument("state and witness act on different registers");
  BoundReport report = robustness_bound(rho, w);
  if (witness == "wmult") report.fidelity_lower_bound = fidelity_bound(report.witness_value);
  const bool detected = report.witness_value < 0.0;

  std::ostringstream text;
  if (format == OutputFormat::kJson) {
    json doc = {{"state", state},
                {"witness", witness},
                {"witness_value", report.witness_value},
                {"fidelity_lower_bound",
                 report.fidelity_lower_bound ? json(*report.fidelity_lower_bound) : json(nullptr)},
                {"random_robustness_lower_bound", report.random_robustness_lower_bound},
                {"trace_of_witness", report.trace_of_witness},
                {"dimension", report.dimension},
                {"detected", detected}};
    text << doc.dump(2) << '\n';
  } else {
    text << "state: " << state << '\n'
         << "witness: " << witness << '\n'
         << "witness_value: " << format_double(report.witness_value) << '\n'
         << "fidelity_lower_bound: " << optional_number(report.fidelity_lower_bound) << '\n'
         << "random_robustness_lower_bound: " << format_double(report.random_robustness_lower_bound) << '\n'
         << "trace_of_witness: " << format_double(report.trace_of_witness) << '\n'
         << "dimension: " << report.dimension << '\n'
         << "detected: " << (detected ? "yes" : "no") << '\n';
  }
  emit(text.str(), output_path, out);
  return detected ? kExitOk : kExitNegative;
}

int cmd_oracle(const std::string& witness, const OracleConfig& config, OutputFormat format,
               const std::string& output_path, std::ostream& out, std::ostream&) {
  const Operator w = witness_by_name(witness);
  const OracleReport report = minimize_witness(w, config);
  const bool pass = report.min_value >= -config.tol;

  std::ostringstream text;
  if (format == OutputFormat::kJson) {
    json doc = {{"witness", witness},
                {"min_value", report.min_value},
                {"argmin", {{"theta", report.argmin.theta}, {"phi", report.argmin.phi}}},
                {"restarts", report.restarts},
                {"samples", report.samples},
                {"converged", report.converged},
                {"seed", report.seed},
                {"tol", config.tol},
                {"pass", pass}};
    text << doc.dump(2) << '\n';
  } else {
    text << "witness: " << witness << '\n'
         << "min_value: " << format_double(report.min_value) << '\n'
         << "theta:";
    for (double t : report.argmin.theta) text << ' ' << format_double(t);
    text << "\nphi:";
    for (double p : report.argmin.phi) text << ' ' << format_double(p);
    text << '\n'
         << "restarts: " << report.restarts << '\n'
         << "samples: " << report.samples << '\n'
         << "converged: " << (report.converged ? "yes" : "no") << '\n'
         << "seed: " << report.seed << '\n'
         << "result: " << (pass ? "pass" : "fail") << '\n';
  }
  emit(text.str(), output_path, out);
  return pass ? kExitOk : kExitNegative;
}

int cmd_calibrate(const std::string& kind, double v, std::ostream& out, std::ostream&) {
  double q = 0.0;
  if (kind == "path") {
    q = q2_from_path_visibility(v);
  } else if (kind == "polarization") {
    q = q1_from_pol_visibility(v);
  } else if (kind == "bs") {
    q = q3_from_bs_visibility(v);
  } else {
    throw std::invalid_argument("unknown visibility kind '" + kind + "' (path, polarization, bs)");
  }
  out << format_double(q) << '\n';
  return kExitOk;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Phased Dicke state witness laboratory"};
  app.require_subcommand(1);
  app.fallthrough();

  std::uint64_t seed = 7;
  std::string output;
  std::string format_name = "csv";
  app.add_option("--seed", seed, "Random seed");
  app.add_option("--output", output, "Output file (default: standard output)");
  app.add_option("--format", format_name, "Output format")->check(CLI::IsMember({"csv", "json"}));

  SweepConfig sweep;
  bool no_checks = false;
  auto* sweep_cmd = app.add_subcommand("sweep", "Evaluate witnesses along a q2 grid");
  sweep_cmd->add_option("--q1", sweep.q1, "Polarization dephasing")->capture_default_str();
  sweep_cmd->add_option("--q3", sweep.q3, "Second beam-splitter dephasing")->capture_default_str();
  sweep_cmd->add_option("--q2-start", sweep.q2_start, "First q2 grid point")->capture_default_str();
  sweep_cmd->add_option("--q2-stop", sweep.q2_stop, "Last q2 grid point")->capture_default_str();
  sweep_cmd->add_option("--steps", sweep.steps, "Number of grid points")->capture_default_str();
  sweep_cmd->add_flag("--no-checks", no_checks, "Skip density-matrix invariant checks");

  std::string state_name;
  std::string witness_name;
  NoiseParams noise{0.05, 0.0175, 0.05};
  auto* witness_cmd = app.add_subcommand("witness", "Evaluate a witness and its bounds on a state");
  witness_cmd->add_option("STATE", state_name, "dicke4, xi, maximally-mixed, dicke4-noisy, or a JSON file")
      ->required();
  witness_cmd->add_option("WITNESS", witness_name, "wbar, w-pi, wmult, identity, neg-identity, gen:...")
      ->required();
  witness_cmd->add_option("--q1", noise.q1, "q1 for dicke4-noisy")->capture_default_str();
  witness_cmd->add_option("--q2", noise.q2, "q2 for dicke4-noisy")->capture_default_str();
  witness_cmd->add_option("--q3", noise.q3, "q3 for dicke4-noisy")->capture_default_str();

  OracleConfig oracle;
  std::string oracle_witness;
  auto* oracle_cmd = app.add_subcommand("oracle", "Minimize a witness over product states");
  oracle_cmd->add_option("WITNESS", oracle_witness, "Witness name")->required();
  oracle_cmd->add_option("--restarts", oracle.restarts, "Local descents")->capture_default_str();
  oracle_cmd->add_option("--samples", oracle.samples, "Random product states")->capture_default_str();
  oracle_cmd->add_option("--tol", oracle.tol, "Pass threshold")->capture_default_str();

  std::string kind;
  double visibility = 0.0;
  auto* calibrate_cmd = app.add_subcommand("calibrate", "Map a visibility to its dephasing parameter");
  calibrate_cmd->add_option("KIND", kind, "path, polarization, or bs")->required();
  calibrate_cmd->add_option("V", visibility, "Visibility in [0, 1]")->required();

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitError;
  }

  const OutputFormat format = format_name == "json" ? OutputFormat::kJson : OutputFormat::kCsv;
  try {
    if (*sweep_cmd) {
      sweep.output_path = output;
      sweep.format = format;
      sweep.seed = seed;
      sweep.validation = no_checks ? Validation::kSkip : Validation::kCheck;
      return cmd_sweep(sweep, out, err);
    }
    if (*witness_cmd) {
      return cmd_witness(state_name, witness_name, noise, format, output, out, err);
    }
    if (*oracle_cmd) {
      oracle.seed = seed;
      return cmd_oracle(oracle_witness, oracle, format, output, out, err);
    }
    if (*calibrate_cmd) return cmd_calibrate(kind, visibility, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}

}  // namespace dickelab
