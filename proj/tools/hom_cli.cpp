#include "hom_cli.hpp"

#include <filesystem>
#include <fstream>
#include <numbers>
#include <stdexcept>

#include "CLI11.hpp"
#include "homsim/errors.hpp"
#include "homsim/experiments.hpp"

namespace homsim::cli {

namespace {

namespace fs = std::filesystem;

struct Options {
  double theta = std::numbers::pi / 4;
  int steps = 8;
  std::uint64_t shots = 10000;
  std::uint64_t seed = 1234;
  int qubits_per_mode = 2;
  bool reduced = false;
  bool exact = false;
  std::string out;
  std::string format = "json";
  std::string qasm_out;
  std::string preset;

  std::vector<int> steps_list{1, 2, 4, 8, 16};
  int points = 17;
  double theta_min = 0.0;
  double theta_max = std::numbers::pi / 2;
  bool circuit = false;
};

struct CommonOptions {
  CLI::Option* theta = nullptr;
  CLI::Option* steps = nullptr;
  CLI::Option* shots = nullptr;
  CLI::Option* seed = nullptr;
  CLI::Option* qubits = nullptr;
  CLI::Option* reduced = nullptr;
  CLI::Option* exact = nullptr;
};

CommonOptions add_common(CLI::App* sub, Options& o) {
  CommonOptions c;
  c.theta = sub->add_option("--theta", o.theta, "Beam-splitter angle in radians (pi/4 is 50:50)")
                ->capture_default_str();
  c.steps = sub->add_option("--steps", o.steps, "First-order Trotter steps")->capture_default_str();
  c.shots = sub->add_option("--shots", o.shots, "Number of samples")->capture_default_str();
  c.seed = sub->add_option("--seed", o.seed, "Seed for the mt19937_64 sampler")->capture_default_str();
  c.qubits = sub->add_option("--qubits-per-mode", o.qubits_per_mode, "Gray-code qubits per optical mode")
                 ->capture_default_str();
  c.reduced = sub->add_flag("--reduced", o.reduced, "Use the HOM-reduced interaction (2 qubits per mode only)");
  c.exact = sub->add_flag("--exact", o.exact, "Evolve with the dense exponential instead of the circuit");
  sub->add_option("--out", o.out, "Output file, or a directory to write hom-<command>-<hash>.<ext> into");
  sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
  return c;
}

ExperimentConfig make_config(const Options& o, const CommonOptions& c) {
  ExperimentConfig cfg;
  if (o.preset == "hardware") cfg = hardware_preset();
  if (o.preset.empty()) {
    cfg.theta = o.theta;
    cfg.trotter_steps = o.steps;
    cfg.shots = o.shots;
    cfg.seed = o.seed;
    cfg.qubits_per_mode = o.qubits_per_mode;
    cfg.reduced = o.reduced;
    cfg.exact = o.exact;
    return cfg;
  }
  // Explicit flags override the preset.
  if (c.theta->count()) cfg.theta = o.theta;
  if (c.steps->count()) cfg.trotter_steps = o.steps;
  if (c.shots->count()) cfg.shots = o.shots;
  if (c.seed->count()) cfg.seed = o.seed;
  if (c.qubits->count()) cfg.qubits_per_mode = o.qubits_per_mode;
  if (c.reduced->count()) cfg.reduced = o.reduced;
  if (c.exact->count()) cfg.exact = o.exact;
  return cfg;
}

fs::path output_path(const std::string& requested, const std::string& command, const std::string& hash,
                     const std::string& ext) {
  fs::path p(requested);
  if (fs::is_directory(p)) return p / ("hom-" + command + "-" + hash + "." + ext);
  return p;
}

void write_file(const fs::path& path, const std::string& text, std::ostream& err) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::invalid_argument("cannot open " + path.string() + " for writing");
  f << text;
  err << "wrote " << path.string() << "\n";
}

void emit(const Options& o, const std::string& command, const std::string& hash, const std::string& text,
          std::ostream& out, std::ostream& err) {
  if (o.out.empty()) {
    out << text;
    return;
  }
  write_file(output_path(o.out, command, hash, o.format), text, err);
}

void emit_qasm(const std::string& requested, const std::string& variant, const std::string& hash,
               const std::string& qasm, std::ostream& err) {
  fs::path p(requested);
  if (fs::is_directory(p)) {
    p /= "hom-" + variant + "-" + hash + ".qasm";
  } else {
    p += "-" + variant + ".qasm";
  }
  write_file(p, qasm, err);
}

std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

nlohmann::json labels_json(int qubits_per_mode) {
  const auto l = hom_labels(qubits_per_mode);
  return {{"coincidence", l.coincidence}, {"pair_in_a", l.pair_in_a}, {"pair_in_b", l.pair_in_b}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{
      "Gray-code beam-splitter compiler and Hong-Ou-Mandel simulator.\n"
      "Qubit labels read (mode B bits)(mode A bits), first Gray bit leftmost; |1,1> is 0101 for 2 qubits per mode.",
      "hom"};
  app.require_subcommand(1);
  Options o;

  auto* run_cmd = app.add_subcommand("run", "Simulate one HOM experiment from |1,1>");
  const auto run_common = add_common(run_cmd, o);
  run_cmd->add_option("--qasm-out", o.qasm_out, "Write the executed circuit as OpenQASM (file prefix or directory)");
  run_cmd->add_option("--preset", o.preset, "Named configuration; 'hardware' = 2 steps, 4000 shots, reduced")
      ->check(CLI::IsMember({"hardware"}));

  auto* trotter_cmd = app.add_subcommand("sweep-trotter", "Circuit-path runs over a list of Trotter step counts");
  const auto trotter_common = add_common(trotter_cmd, o);
  trotter_cmd->add_option("--steps-list", o.steps_list, "Comma-separated step counts")
      ->delimiter(',')
      ->capture_default_str();

  auto* theta_cmd = app.add_subcommand("sweep-theta", "Coincidence probability over an evenly spaced theta grid");
  const auto theta_common = add_common(theta_cmd, o);
  theta_cmd->add_option("--points", o.points, "Number of grid points")->capture_default_str();
  theta_cmd->add_option("--theta-min", o.theta_min, "Grid start (radians)")->capture_default_str();
  theta_cmd->add_option("--theta-max", o.theta_max, "Grid end (radians)")->capture_default_str();
  theta_cmd->add_flag("--circuit", o.circuit, "Use the synthesized circuit instead of the exact exponential");

  auto* report_cmd = app.add_subcommand("circuit-report", "Depth and CX counts of the full and reduced circuits");
  const auto report_common = add_common(report_cmd, o);
  report_cmd->add_option("--qasm-out", o.qasm_out, "Write <prefix>-full.qasm / <prefix>-reduced.qasm, or into a directory");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitInvalidConfig;
  }

  try {
    if (*run_cmd) {
      const auto cfg = make_config(o, run_common);
      const auto report = run_hom(cfg);
      const auto hash = config_hash(cfg);
      emit(o, "run", hash, o.format == "csv" ? to_csv(report) : dump(nlohmann::json(report)), out, err);
      if (!o.qasm_out.empty()) {
        if (cfg.exact) throw std::invalid_argument("--qasm-out needs the circuit path (drop --exact)");
        emit_qasm(o.qasm_out, cfg.reduced ? "reduced" : "full", hash, export_qasm(hom_circuit(cfg)), err);
      }
    } else if (*trotter_cmd) {
      auto cfg = make_config(o, trotter_common);
      cfg.exact = false;
      const auto rows = sweep_trotter(cfg, o.steps_list);
      const auto hash = config_hash(cfg);
      std::string text;
      if (o.format == "csv") {
        text = to_csv(rows);
      } else {
        nlohmann::json j = {{"config", cfg},
                            {"config_hash", hash},
                            {"labels", labels_json(cfg.qubits_per_mode)},
                            {"rng", {{"algorithm", kRngAlgorithm}, {"seed", cfg.seed}, {"row_seed", "seed + row index"}}},
                            {"rows", rows}};
        text = dump(j);
      }
      emit(o, "sweep-trotter", hash, text, out, err);
    } else if (*theta_cmd) {
      auto cfg = make_config(o, theta_common);
      const auto grid = linspace(o.theta_min, o.theta_max, o.points);
      const auto rows = sweep_theta(cfg, grid, o.circuit);
      cfg.exact = !o.circuit;
      const auto hash = config_hash(cfg);
      std::string text;
      if (o.format == "csv") {
        text = to_csv(rows);
      } else {
        nlohmann::json j = {{"config", cfg},
                            {"config_hash", hash},
                            {"path", o.circuit ? "circuit" : "exact"},
                            {"coincidence_label", hom_labels(cfg.qubits_per_mode).coincidence},
                            {"rows", rows}};
        text = dump(j);
      }
      emit(o, "sweep-theta", hash, text, out, err);
    } else if (*report_cmd) {
      const auto cfg = make_config(o, report_common);
      const auto report = circuit_report(cfg);
      const auto hash = config_hash(cfg);
      emit(o, "circuit-report", hash, o.format == "csv" ? to_csv(report) : dump(nlohmann::json(report)), out, err);
      if (!o.qasm_out.empty()) {
        for (const auto& v : report.variants) emit_qasm(o.qasm_out, v.name, hash, v.qasm, err);
      }
    }
  } catch (const InvariantViolation& e) {
    err << "invariant violation: " << e.what() << "\n";
    return kExitInvariant;
  } catch (const std::invalid_argument& e) {
    err << "invalid configuration: " << e.what() << "\n";
    return kExitInvalidConfig;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInvariant;
  }
  return kExitOk;
}

}  // namespace homsim::cli
