#include "homsim/experiments.hpp"

#include <cmath>
#include <future>
#include <iomanip>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "homsim/beamsplitter.hpp"
#include "homsim/errors.hpp"

namespace homsim {

namespace {

constexpr int kMinQubitsPerMode = 2;  // |2>_F must be representable
constexpr int kMaxQubitsPerMode = 4;  // 8-qubit register keeps the dense oracle at 256 x 256
constexpr double kProbabilitySumTolerance = 1e-9;

void check_probability_sum(const std::vector<double>& p) {
  const double total = std::accumulate(p.begin(), p.end(), 0.0);
  if (std::abs(total - 1.0) > kProbabilitySumTolerance) {
    std::ostringstream msg;
    msg << "probabilities sum to " << std::setprecision(17) << total;
    throw InvariantViolation(msg.str());
  }
}

Interaction select_interaction(const ExperimentConfig& config, const FockEncoding& enc) {
  return config.reduced ? reduced_interaction(config.qubits_per_mode) : interaction(enc);
}

StateVector evolve(const ExperimentConfig& config, const Interaction& inter, std::optional<CircuitMetrics>* metrics_out) {
  const auto n = inter.width();
  const auto labels = hom_labels(config.qubits_per_mode);
  if (config.exact) {
    return apply_dense(init_basis(n, labels.coincidence), exact_unitary(config.theta, inter));
  }
  Circuit c = hom_preparation(config.qubits_per_mode);
  c.append(synthesize(inter, config.theta, config.trotter_steps));
  if (metrics_out) *metrics_out = metrics(c);
  return apply_circuit(StateVector(n), c);
}

std::ostringstream csv_stream() {
  std::ostringstream os;
  os << std::setprecision(15);
  return os;
}

}  // namespace

void ExperimentConfig::validate() const {
  if (!std::isfinite(theta)) throw std::invalid_argument("theta must be finite");
  if (trotter_steps < 1) throw std::invalid_argument("trotter steps must be >= 1");
  if (shots < 1) throw std::invalid_argument("shots must be >= 1");
  if (qubits_per_mode < kMinQubitsPerMode || qubits_per_mode > kMaxQubitsPerMode) {
    throw std::invalid_argument("qubits per mode must be in [" + std::to_string(kMinQubitsPerMode) + ", " +
                                std::to_string(kMaxQubitsPerMode) + "] for HOM experiments");
  }
  if (reduced && qubits_per_mode != 2) {
    throw std::invalid_argument("the reduced interaction requires 2 qubits per mode");
  }
}

ExperimentConfig hardware_preset() {
  ExperimentConfig c;
  c.trotter_steps = 2;
  c.shots = 4000;
  c.reduced = true;
  c.note = "noiseless reproduction";
  return c;
}

HomLabels hom_labels(int qubits_per_mode) {
  const FockEncoding enc(qubits_per_mode);
  if (enc.capacity() < 2) throw std::invalid_argument("HOM labels need capacity >= 2");
  return {product_label(enc, 1, 1), product_label(enc, 0, 2), product_label(enc, 2, 0)};
}

Circuit hom_preparation(int qubits_per_mode) {
  const auto label = hom_labels(qubits_per_mode).coincidence;
  Circuit c(label.size());
  for (std::size_t q = 0; q < label.size(); ++q) {
    if (label[q] == '1') c.add(Gate::x(q));
  }
  return c;
}

Circuit hom_circuit(const ExperimentConfig& config) {
  config.validate();
  const FockEncoding enc(config.qubits_per_mode);
  Circuit c = hom_preparation(config.qubits_per_mode);
  c.append(synthesize(select_interaction(config, enc), config.theta, config.trotter_steps));
  return c;
}

ExperimentReport run_hom(const ExperimentConfig& config) {
  config.validate();
  const FockEncoding enc(config.qubits_per_mode);
  const Interaction full = interaction(enc);
  const Interaction chosen = select_interaction(config, enc);
  const auto labels = hom_labels(config.qubits_per_mode);
  const auto n = full.width();

  ExperimentReport report;
  report.config = config;
  report.rng_algorithm = std::string(kRngAlgorithm);

  const StateVector reference = apply_dense(init_basis(n, labels.coincidence), exact_unitary(config.theta, full));
  const StateVector out = evolve(config, chosen, &report.metrics);

  const auto p = probabilities(out);
  check_probability_sum(p);
  for (std::size_t idx = 0; idx < p.size(); ++idx) report.probabilities[basis_label(n, idx)] = p[idx];
  report.counts = sample(out, config.shots, config.seed);
  report.fidelity_to_exact = fidelity(reference, out);
  return report;
}

std::vector<TrotterSweepRow> sweep_trotter(const ExperimentConfig& config, const std::vector<int>& steps_list) {
  if (steps_list.empty()) throw std::invalid_argument("sweep_trotter: steps list is empty");
  ExperimentConfig base = config;
  base.exact = false;
  for (int s : steps_list) {
    base.trotter_steps = s;
    base.validate();
  }
  const auto labels = hom_labels(config.qubits_per_mode);

  std::vector<std::future<TrotterSweepRow>> jobs;
  jobs.reserve(steps_list.size());
  for (std::size_t k = 0; k < steps_list.size(); ++k) {
    ExperimentConfig row_config = base;
    row_config.trotter_steps = steps_list[k];
    row_config.seed = config.seed + k;
    jobs.push_back(std::async(std::launch::async, [row_config, labels] {
      const auto r = run_hom(row_config);
      TrotterSweepRow row;
      row.steps = row_config.trotter_steps;
      row.p_coincidence = r.probabilities.at(labels.coincidence);
      row.p_pair_in_a = r.probabilities.at(labels.pair_in_a);
      row.p_pair_in_b = r.probabilities.at(labels.pair_in_b);
      row.n_coincidence = r.counts.count(labels.coincidence);
      row.n_pair_in_a = r.counts.count(labels.pair_in_a);
      row.n_pair_in_b = r.counts.count(labels.pair_in_b);
      row.fidelity = r.fidelity_to_exact;
      row.depth = r.metrics->depth;
      row.cx_count = r.metrics->cx_count;
      row.seed = row_config.seed;
      return row;
    }));
  }
  std::vector<TrotterSweepRow> rows;
  rows.reserve(jobs.size());
  for (auto& j : jobs) rows.push_back(j.get());
  return rows;
}

std::vector<ThetaSweepRow> sweep_theta(const ExperimentConfig& config, const std::vector<double>& thetas,
                                       bool circuit_path) {
  if (thetas.empty()) throw std::invalid_argument("sweep_theta: theta grid is empty");
  ExperimentConfig cfg = config;
  cfg.exact = !circuit_path;
  cfg.validate();
  const FockEncoding enc(cfg.qubits_per_mode);
  const Interaction inter = select_interaction(cfg, enc);
  const auto label = hom_labels(cfg.qubits_per_mode).coincidence;

  std::vector<ThetaSweepRow> rows;
  rows.reserve(thetas.size());
  for (double theta : thetas) {
    cfg.theta = theta;
    cfg.validate();
    const StateVector out = evolve(cfg, inter, nullptr);
    const auto p = probabilities(out);
    check_probability_sum(p);
    rows.push_back({theta, p[basis_index(out.n_qubits(), label)]});
  }
  return rows;
}

std::vector<double> linspace(double lo, double hi, int points) {
  if (points < 1) throw std::invalid_argument("linspace: need at least one point");
  if (points == 1) return {lo};
  std::vector<double> out(static_cast<std::size_t>(points));
  for (int k = 0; k < points; ++k) out[static_cast<std::size_t>(k)] = lo + (hi - lo) * k / (points - 1);
  return out;
}

CircuitReport circuit_report(const ExperimentConfig& config) {
  if (config.exact) throw std::invalid_argument("circuit_report needs the circuit path (exact = false)");
  config.validate();
  const FockEncoding enc(config.qubits_per_mode);
  CircuitReport report;
  report.config = config;

  const Circuit full = synthesize(interaction(enc), config.theta, config.trotter_steps);
  report.variants.push_back({"full", metrics(full), export_qasm(full)});
  if (config.qubits_per_mode == 2) {
    const Circuit reduced = synthesize(reduced_interaction(2), config.theta, config.trotter_steps);
    report.variants.push_back({"reduced", metrics(reduced), export_qasm(reduced)});
  }
  return report;
}

void to_json(nlohmann::json& j, const ExperimentConfig& c) {
  j = {{"theta", c.theta},     {"trotter_steps", c.trotter_steps},
       {"shots", c.shots},     {"seed", c.seed},
       {"reduced", c.reduced}, {"exact", c.exact},
       {"qubits_per_mode", c.qubits_per_mode}, {"note", c.note}};
}

void from_json(const nlohmann::json& j, ExperimentConfig& c) {
  j.at("theta").get_to(c.theta);
  j.at("trotter_steps").get_to(c.trotter_steps);
  j.at("shots").get_to(c.shots);
  j.at("seed").get_to(c.seed);
  j.at("reduced").get_to(c.reduced);
  j.at("exact").get_to(c.exact);
  j.at("qubits_per_mode").get_to(c.qubits_per_mode);
  c.note = j.value("note", "");
}

void to_json(nlohmann::json& j, const CircuitMetrics& m) {
  j = {{"depth", m.depth}, {"cx", m.cx_count}, {"total_gates", m.total_gates}, {"gate_counts", m.gate_counts}};
}

void from_json(const nlohmann::json& j, CircuitMetrics& m) {
  j.at("depth").get_to(m.depth);
  j.at("cx").get_to(m.cx_count);
  j.at("total_gates").get_to(m.total_gates);
  j.at("gate_counts").get_to(m.gate_counts);
}

void to_json(nlohmann::json& j, const ExperimentReport& r) {
  j = nlohmann::json::object();
  j["config"] = r.config;
  j["config_hash"] = config_hash(r.config);
  j["mode"] = r.config.exact ? "exact" : "circuit";
  j["probabilities"] = r.probabilities;
  j["counts"] = r.counts.counts;
  j["metrics"] = r.metrics ? nlohmann::json(*r.metrics) : nlohmann::json(nullptr);
  j["fidelity_to_exact"] = r.fidelity_to_exact;
  j["rng"] = {{"algorithm", r.rng_algorithm}, {"seed", r.config.seed}};
}

void from_json(const nlohmann::json& j, ExperimentReport& r) {
  j.at("config").get_to(r.config);
  j.at("probabilities").get_to(r.probabilities);
  j.at("counts").get_to(r.counts.counts);
  r.counts.shots = r.config.shots;
  if (j.at("metrics").is_null()) {
    r.metrics.reset();
  } else {
    r.metrics = j.at("metrics").get<CircuitMetrics>();
  }
  j.at("fidelity_to_exact").get_to(r.fidelity_to_exact);
  j.at("rng").at("algorithm").get_to(r.rng_algorithm);
}

void to_json(nlohmann::json& j, const TrotterSweepRow& r) {
  j = {{"steps", r.steps},
       {"p_coincidence", r.p_coincidence},
       {"p_pair_in_a", r.p_pair_in_a},
       {"p_pair_in_b", r.p_pair_in_b},
       {"n_coincidence", r.n_coincidence},
       {"n_pair_in_a", r.n_pair_in_a},
       {"n_pair_in_b", r.n_pair_in_b},
       {"fidelity", r.fidelity},
       {"depth", r.depth},
       {"cx", r.cx_count},
       {"seed", r.seed}};
}

void from_json(const nlohmann::json& j, TrotterSweepRow& r) {
  j.at("steps").get_to(r.steps);
  j.at("p_coincidence").get_to(r.p_coincidence);
  j.at("p_pair_in_a").get_to(r.p_pair_in_a);
  j.at("p_pair_in_b").get_to(r.p_pair_in_b);
  j.at("n_coincidence").get_to(r.n_coincidence);
  j.at("n_pair_in_a").get_to(r.n_pair_in_a);
  j.at("n_pair_in_b").get_to(r.n_pair_in_b);
  j.at("fidelity").get_to(r.fidelity);
  j.at("depth").get_to(r.depth);
  j.at("cx").get_to(r.cx_count);
  j.at("seed").get_to(r.seed);
}

void to_json(nlohmann::json& j, const ThetaSweepRow& r) {
  j = {{"theta", r.theta}, {"p_coincidence", r.p_coincidence}};
}

void from_json(const nlohmann::json& j, ThetaSweepRow& r) {
  j.at("theta").get_to(r.theta);
  j.at("p_coincidence").get_to(r.p_coincidence);
}

void to_json(nlohmann::json& j, const CircuitReport& r) {
  j = nlohmann::json::object();
  j["config"] = r.config;
  j["config_hash"] = config_hash(r.config);
  auto& variants = j["circuits"];
  variants = nlohmann::json::object();
  for (const auto& v : r.variants) variants[v.name] = {{"metrics", v.metrics}};
}

std::string to_csv(const ExperimentReport& r) {
  auto os = csv_stream();
  os << "label,probability,count\n";
  for (const auto& [label, p] : r.probabilities) os << label << "," << p << "," << r.counts.count(label) << "\n";
  return os.str();
}

std::string to_csv(const std::vector<TrotterSweepRow>& rows) {
  auto os = csv_stream();
  os << "steps,p_coincidence,p_pair_in_a,p_pair_in_b,n_coincidence,n_pair_in_a,n_pair_in_b,fidelity,depth,cx,seed\n";
  for (const auto& r : rows) {
    os << r.steps << "," << r.p_coincidence << "," << r.p_pair_in_a << "," << r.p_pair_in_b << ","
       << r.n_coincidence << "," << r.n_pair_in_a << "," << r.n_pair_in_b << "," << r.fidelity << "," << r.depth
       << "," << r.cx_count << "," << r.seed << "\n";
  }
  return os.str();
}

std::string to_csv(const std::vector<ThetaSweepRow>& rows) {
  auto os = csv_stream();
  os << "theta,p_coincidence\n";
  for (const auto& r : rows) os << r.theta << "," << r.p_coincidence << "\n";
  return os.str();
}

std::string to_csv(const CircuitReport& r) {
  auto os = csv_stream();
  os << "variant,depth,cx,total_gates\n";
  for (const auto& v : r.variants) {
    os << v.name << "," << v.metrics.depth << "," << v.metrics.cx_count << "," << v.metrics.total_gates << "\n";
  }
  return os.str();
}

std::string config_hash(const ExperimentConfig& config) {
  const std::string canonical = nlohmann::json(config).dump();
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : canonical) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

}  // namespace homsim
