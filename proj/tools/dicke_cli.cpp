// Command-line front end: optimize a pulse sequence, evaluate fidelity,
// run error sweeps, cross-check against the full-space oracle, export the
// Bloch trajectory, convert to physical units.
//
// Exit codes: 0 success, 1 usage or input error, 2 optimizer did not
// converge, 3 oracle mismatch, 4 parity-confinement failure.

#include "dicke/fullspace.hpp"
#include "dicke/io.hpp"
#include "dicke/json_io.hpp"
#include "dicke/optimizer.hpp"
#include "dicke/parity.hpp"
#include "dicke/platform.hpp"
#include "dicke/pulse_sequence.hpp"
#include "dicke/robustness.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

namespace {

using namespace dicke;

int cmd_optimize(int n, int target, int starts, std::uint64_t seed,
                 const std::string& out_path) {
  OptimizerConfig config = default_optimize_config();
  config.starts = starts;
  config.seed = seed;
  const OptimizationResult result = optimize(n, target, config);

  std::ofstream out(out_path);
  if (!out) {
    std::cerr << "cannot write output file: " << out_path << "\n";
    return 1;
  }
  out << to_json(result).dump(2) << "\n";
  std::cout << "fidelity=" << format_double(result.fidelity)
            << " duration=" << format_double(total_duration(result.best))
            << " converged=" << (result.converged ? "true" : "false") << "\n";
  return result.converged ? 0 : 2;
}

int cmd_fidelity(const std::string& params_path) {
  const PulseSequence seq = load_sequence(params_path);
  std::cout << "fidelity=" << format_double(fidelity(seq))
            << " duration=" << format_double(total_duration(seq)) << "\n";
  return 0;
}

int cmd_sweep(const std::string& params_path, const std::string& param_x,
              const std::string& param_y, const std::string& range, int steps,
              const std::string& out_path) {
  const PulseSequence seq = load_sequence(params_path);
  const auto colon = range.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("--range must have the form MIN:MAX");
  double lo = 0.0, hi = 0.0;
  try {
    lo = std::stod(range.substr(0, colon));
    hi = std::stod(range.substr(colon + 1));
  } catch (const std::exception&) {
    throw std::invalid_argument("--range must have the form MIN:MAX");
  }

  const SweepParam px = sweep_param_from_name(param_x);
  SweepGrid grid;
  if (param_y.empty()) {
    grid = sweep_1d(seq, px, lo, hi, steps);
  } else {
    const SweepParam py = sweep_param_from_name(param_y);
    grid = sweep_2d(seq, px, lo, hi, steps, py, lo, hi, steps);
  }

  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    std::cerr << "cannot write output file: " << out_path << "\n";
    return 1;
  }
  write_sweep_csv(out, grid);
  return 0;
}

int cmd_verify(const std::string& params_path) {
  const PulseSequence seq = load_sequence(params_path);
  if (seq.n_qubits > kMaxFullQubits) {
    std::cerr << "n exceeds the full-space cap of " << kMaxFullQubits
              << "; the oracle refuses\n";
    return 1;
  }
  const Vector sector = final_state(seq);
  const FullState full = evolve_full(seq, dicke_state_full(seq.n_qubits, 0));
  const Vector projected = project_to_sector(full);
  double deviation = (sector - projected).cwiseAbs().maxCoeff();
  deviation = std::max(deviation, sector_leakage(full));
  std::cout << "max_deviation=" << format_double(deviation) << "\n";
  return deviation <= kOracleTol ? 0 : 3;
}

int cmd_bloch(const std::string& params_path, int samples, const std::string& out_path) {
  const PulseSequence seq = load_sequence(params_path);
  std::vector<BlochSample> trajectory;
  try {
    trajectory = bloch_trajectory(seq, samples);
  } catch (const LeakageError& e) {
    std::cerr << e.what() << "\n";
    return 4;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    std::cerr << "cannot write output file: " << out_path << "\n";
    return 1;
  }
  write_trajectory_csv(out, trajectory);
  return 0;
}

int cmd_platform_time(const std::string& params_path, bool have_c6, double c6,
                      bool have_r, double r, bool have_coupling, double coupling) {
  const PulseSequence seq = load_sequence(params_path);
  if (have_coupling == (have_c6 || have_r)) {
    std::cerr << "give either --coupling or both --c6 and --r\n";
    return 1;
  }
  double j_over_hbar = 0.0;
  if (have_coupling) {
    if (!(coupling > 0.0)) throw std::invalid_argument("--coupling must be positive");
    j_over_hbar = coupling;
  } else {
    if (!have_c6 || !have_r) {
      std::cerr << "give either --coupling or both --c6 and --r\n";
      return 1;
    }
    j_over_hbar = vdw_coupling(PlatformParams{c6, r}) / kHBar;
  }
  const double t = physical_duration(seq, j_over_hbar * kHBar);
  std::cout << "J_over_hbar=" << format_double(j_over_hbar)
            << " T=" << format_double(t) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dicke-state preparation via global transverse control of "
               "Ising-coupled qubits"};
  app.require_subcommand(1);

  int n = 3;
  int target = 2;
  int starts = 64;
  std::uint64_t seed = 0;
  int steps = 41;
  int samples = 100;
  std::string out_path;
  std::string params_path;
  std::string param_x;
  std::string param_y;
  std::string range = "-0.1:0.1";
  double c6 = 0.0, r = 0.0, coupling = 0.0;

  CLI::App* optimize_cmd =
      app.add_subcommand("optimize", "Optimize the eight pulse-sequence parameters");
  optimize_cmd->add_option("--n", n, "number of qubits")->required();
  optimize_cmd->add_option("--target", target, "target excitation number")->required();
  optimize_cmd->add_option("--starts", starts, "multistart count");
  optimize_cmd->add_option("--seed", seed, "PRNG seed");
  optimize_cmd->add_option("--out", out_path, "output JSON path")->required();

  CLI::App* fidelity_cmd =
      app.add_subcommand("fidelity", "Evaluate fidelity and duration of a sequence");
  fidelity_cmd->add_option("--params", params_path, "sequence JSON")->required();

  CLI::App* sweep_cmd =
      app.add_subcommand("sweep", "Infidelity sweep over systematic errors");
  sweep_cmd->add_option("--params", params_path, "sequence JSON")->required();
  sweep_cmd->add_option("--param-x", param_x, "swept parameter")->required();
  sweep_cmd->add_option("--param-y", param_y, "second swept parameter (2D)");
  sweep_cmd->add_option("--range", range, "error range MIN:MAX");
  sweep_cmd->add_option("--steps", steps, "grid points per axis");
  sweep_cmd->add_option("--out", out_path, "output CSV path")->required();

  CLI::App* verify_cmd =
      app.add_subcommand("verify", "Cross-check the sector evolution against the "
                                   "full-Hilbert-space oracle");
  verify_cmd->add_option("--params", params_path, "sequence JSON")->required();

  CLI::App* bloch_cmd =
      app.add_subcommand("bloch", "Export the Bloch-sphere trajectory (n = 3)");
  bloch_cmd->add_option("--params", params_path, "sequence JSON")->required();
  bloch_cmd->add_option("--samples", samples, "samples per stage");
  bloch_cmd->add_option("--out", out_path, "output CSV path")->required();

  CLI::App* platform_cmd =
      app.add_subcommand("platform-time", "Convert the sequence duration to seconds");
  platform_cmd->add_option("--params", params_path, "sequence JSON")->required();
  CLI::Option* c6_opt = platform_cmd->add_option("--c6", c6, "vdW coefficient, J m^6");
  CLI::Option* r_opt = platform_cmd->add_option("--r", r, "interatomic distance, m");
  CLI::Option* coupling_opt =
      platform_cmd->add_option("--coupling", coupling, "J/hbar in 1/s");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (optimize_cmd->parsed())
      return cmd_optimize(n, target, starts, seed, out_path);
    if (fidelity_cmd->parsed()) return cmd_fidelity(params_path);
    if (sweep_cmd->parsed())
      return cmd_sweep(params_path, param_x, param_y, range, steps, out_path);
    if (verify_cmd->parsed()) return cmd_verify(params_path);
    if (bloch_cmd->parsed()) return cmd_bloch(params_path, samples, out_path);
    if (platform_cmd->parsed())
      return cmd_platform_time(params_path, c6_opt->count() > 0, c6,
                               r_opt->count() > 0, r, coupling_opt->count() > 0,
                               coupling);
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
  std::cerr << "no subcommand given\n";
  return 1;
}
