#pragma once

#include <cstdint>
#include <map>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "homsim/circuit.hpp"
#include "homsim/statevector.hpp"

namespace homsim {

/// Settings of one HOM simulation. The defaults describe a 50:50 splitter
/// (theta = arctan(R/T) with R = T), two qubits per mode and 10,000 shots.
struct ExperimentConfig {
  double theta = std::numbers::pi / 4;
  int trotter_steps = 8;
  std::uint64_t shots = 10000;
  std::uint64_t seed = 1234;
  bool reduced = false;
  bool exact = false;
  int qubits_per_mode = 2;
  std::string note;

  /// Throws std::invalid_argument for non-finite theta, steps < 1, shots < 1,
  /// qubits_per_mode outside [2, 4], or reduced with qubits_per_mode != 2.
  void validate() const;

  bool operator==(const ExperimentConfig&) const = default;
};

/// Two Trotter steps, 4000 shots, reduced interaction; the local noiseless
/// stand-in for the published hardware run.
ExperimentConfig hardware_preset();

struct ExperimentReport {
  ExperimentConfig config;
  std::map<std::string, double> probabilities;  // every basis label
  Histogram counts;
  std::optional<CircuitMetrics> metrics;        // absent on the exact path
  double fidelity_to_exact = 1.0;
  std::string rng_algorithm;

  bool operator==(const ExperimentReport&) const = default;
};

/// Labels of |1,1>, |0,2> and |2,0> for an encoding.
struct HomLabels {
  std::string coincidence;
  std::string pair_in_a;  // |0>_B |2>_A
  std::string pair_in_b;  // |2>_B |0>_A
};
HomLabels hom_labels(int qubits_per_mode);

/// X gates preparing |1,1> from |0...0>.
Circuit hom_preparation(int qubits_per_mode);

/// State preparation followed by the synthesized beam-splitter block.
Circuit hom_circuit(const ExperimentConfig& config);

ExperimentReport run_hom(const ExperimentConfig& config);

struct TrotterSweepRow {
  int steps = 0;
  double p_coincidence = 0.0;
  double p_pair_in_a = 0.0;
  double p_pair_in_b = 0.0;
  std::uint64_t n_coincidence = 0;
  std::uint64_t n_pair_in_a = 0;
  std::uint64_t n_pair_in_b = 0;
  double fidelity = 0.0;
  std::size_t depth = 0;
  std::size_t cx_count = 0;
  std::uint64_t seed = 0;

  bool operator==(const TrotterSweepRow&) const = default;
};

/// One circuit-path run per step count; row k samples with seed config.seed + k.
std::vector<TrotterSweepRow> sweep_trotter(const ExperimentConfig& config, const std::vector<int>& steps_list);

struct ThetaSweepRow {
  double theta = 0.0;
  double p_coincidence = 0.0;

  bool operator==(const ThetaSweepRow&) const = default;
};

/// Coincidence probability per theta, exact by default or through the synthesized
/// circuit with config.trotter_steps when `circuit_path` is set.
std::vector<ThetaSweepRow> sweep_theta(const ExperimentConfig& config, const std::vector<double>& thetas,
                                       bool circuit_path = false);

/// `points` evenly spaced values over [lo, hi], endpoints included.
std::vector<double> linspace(double lo, double hi, int points);

struct CircuitVariant {
  std::string name;  // "full" or "reduced"
  CircuitMetrics metrics;
  std::string qasm;

  bool operator==(const CircuitVariant&) const = default;
};

struct CircuitReport {
  ExperimentConfig config;
  std::vector<CircuitVariant> variants;

  bool operator==(const CircuitReport&) const = default;
};

/// Metrics and QASM of the synthesized beam-splitter block for the full
/// interaction and, for two qubits per mode, the reduced one.
CircuitReport circuit_report(const ExperimentConfig& config);

// Serialization.
void to_json(nlohmann::json& j, const ExperimentConfig& c);
void from_json(const nlohmann::json& j, ExperimentConfig& c);
void to_json(nlohmann::json& j, const CircuitMetrics& m);
void from_json(const nlohmann::json& j, CircuitMetrics& m);
void to_json(nlohmann::json& j, const ExperimentReport& r);
void from_json(const nlohmann::json& j, ExperimentReport& r);
void to_json(nlohmann::json& j, const TrotterSweepRow& r);
void from_json(const nlohmann::json& j, TrotterSweepRow& r);
void to_json(nlohmann::json& j, const ThetaSweepRow& r);
void from_json(const nlohmann::json& j, ThetaSweepRow& r);
void to_json(nlohmann::json& j, const CircuitReport& r);

std::string to_csv(const ExperimentReport& r);
std::string to_csv(const std::vector<TrotterSweepRow>& rows);
std::string to_csv(const std::vector<ThetaSweepRow>& rows);
std::string to_csv(const CircuitReport& r);

/// 16 hex digits of FNV-1a over the canonical JSON of the config.
std::string config_hash(const ExperimentConfig& config);

}  // namespace homsim
