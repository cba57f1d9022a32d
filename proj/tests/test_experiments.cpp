#include "homsim/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "gtest/gtest.h"

using namespace homsim;

namespace {

constexpr double kPi = std::numbers::pi;

double probability_sum(const ExperimentReport& r) {
  double total = 0.0;
  for (const auto& [label, p] : r.probabilities) total += p;
  return total;
}

}  // namespace

TEST(experiment_config, defaults_and_validation) {
  const ExperimentConfig c;
  EXPECT_DOUBLE_EQ(c.theta, kPi / 4);
  EXPECT_EQ(c.shots, 10000u);
  EXPECT_EQ(c.qubits_per_mode, 2);
  EXPECT_NO_THROW(c.validate());

  auto bad = c;
  bad.trotter_steps = 0;
  EXPECT_THROW(bad.validate(), std::invalid_argument);
  bad = c;
  bad.shots = 0;
  EXPECT_THROW(bad.validate(), std::invalid_argument);
  bad = c;
  bad.theta = std::nan("");
  EXPECT_THROW(bad.validate(), std::invalid_argument);
  bad = c;
  bad.qubits_per_mode = 1;
  EXPECT_THROW(bad.validate(), std::invalid_argument);
  bad = c;
  bad.qubits_per_mode = 3;
  bad.reduced = true;
  EXPECT_THROW(bad.validate(), std::invalid_argument);
  EXPECT_THROW(run_hom(bad), std::invalid_argument);
}

TEST(experiment_config, hardware_preset) {
  const auto c = hardware_preset();
  EXPECT_EQ(c.trotter_steps, 2);
  EXPECT_EQ(c.shots, 4000u);
  EXPECT_TRUE(c.reduced);
  EXPECT_EQ(c.note, "noiseless reproduction");
  const auto r = run_hom(c);
  EXPECT_EQ(r.counts.shots, 4000u);
}

TEST(hom_labels, gray_product_labels) {
  const auto l = hom_labels(2);
  EXPECT_EQ(l.coincidence, "0101");
  EXPECT_EQ(l.pair_in_a, "0011");
  EXPECT_EQ(l.pair_in_b, "1100");
  EXPECT_EQ(hom_labels(3).coincidence, "001001");
  EXPECT_EQ(hom_preparation(2).size(), 2u);
}

TEST(run_hom, exact_fifty_fifty) {
  ExperimentConfig c;
  c.exact = true;
  const auto r = run_hom(c);
  EXPECT_LE(r.probabilities.at("0101"), 1e-9);
  EXPECT_NEAR(r.probabilities.at("0011"), 0.5, 1e-9);
  EXPECT_NEAR(r.probabilities.at("1100"), 0.5, 1e-9);
  EXPECT_FALSE(r.metrics.has_value());
  EXPECT_NEAR(r.fidelity_to_exact, 1.0, 1e-12);
  EXPECT_EQ(r.rng_algorithm, "mt19937_64+inverse_cdf53");
  EXPECT_NEAR(probability_sum(r), 1.0, 1e-9);
}

TEST(run_hom, zero_theta_keeps_one_one) {
  for (bool exact : {true, false}) {
    ExperimentConfig c;
    c.theta = 0.0;
    c.exact = exact;
    const auto r = run_hom(c);
    EXPECT_NEAR(r.probabilities.at("0101"), 1.0, 1e-12);
    EXPECT_EQ(r.counts.count("0101"), c.shots);
  }
}

TEST(run_hom, ten_step_circuit_regression) {
  // Frozen from an independent numpy/scipy evaluation of the same product formula.
  ExperimentConfig c;
  c.trotter_steps = 10;
  const auto r = run_hom(c);
  ASSERT_TRUE(r.metrics.has_value());
  EXPECT_GE(r.fidelity_to_exact, 0.9785303363979125 - 1e-9);
  EXPECT_LE(r.probabilities.at("0101"), 5.254297965167954e-05 + 1e-12);
  EXPECT_NEAR(r.probabilities.at("0101"), 5.254297965167954e-05, 1e-12);
  EXPECT_EQ(r.metrics->cx_count, 1280u);
  EXPECT_EQ(r.metrics->gate_counts.at("x"), 2u);
  EXPECT_NEAR(probability_sum(r), 1.0, 1e-9);
}

TEST(run_hom, larger_encodings) {
  ExperimentConfig c;
  c.qubits_per_mode = 3;
  c.exact = true;
  const auto r = run_hom(c);
  const auto l = hom_labels(3);
  EXPECT_NEAR(r.probabilities.at(l.pair_in_a), 0.5, 1e-9);
  EXPECT_NEAR(r.probabilities.at(l.pair_in_b), 0.5, 1e-9);
  EXPECT_LE(r.probabilities.at(l.coincidence), 1e-9);
}

TEST(run_hom, reduced_circuit_tracks_exact_as_steps_grow) {
  ExperimentConfig c;
  c.reduced = true;
  double previous = 0.0;
  for (int steps : {1, 4, 16, 64}) {
    c.trotter_steps = steps;
    const double f = run_hom(c).fidelity_to_exact;
    EXPECT_GT(f, previous) << steps;
    previous = f;
  }
  EXPECT_GE(previous, 0.999);
}

TEST(run_hom, reports_are_byte_identical_for_fixed_seed) {
  ExperimentConfig c;
  c.trotter_steps = 3;
  EXPECT_EQ(nlohmann::json(run_hom(c)).dump(), nlohmann::json(run_hom(c)).dump());
}

TEST(report_json, round_trips) {
  for (bool exact : {true, false}) {
    ExperimentConfig c;
    c.exact = exact;
    c.trotter_steps = 2;
    c.note = "round trip";
    const auto r = run_hom(c);
    const nlohmann::json j = r;
    EXPECT_EQ(j.at("rng").at("algorithm"), "mt19937_64+inverse_cdf53");
    EXPECT_EQ(j.at("rng").at("seed"), c.seed);
    EXPECT_EQ(j.at("metrics").is_null(), exact);
    if (!exact) EXPECT_EQ(j.at("metrics").at("cx"), 256);
    const auto back = nlohmann::json::parse(j.dump()).get<ExperimentReport>();
    EXPECT_EQ(back, r);
  }
}

TEST(sweep_trotter, trends) {
  const ExperimentConfig c;
  const auto rows = sweep_trotter(c, {1, 2, 4, 8, 16});
  ASSERT_EQ(rows.size(), 5u);
  EXPECT_LT(rows.back().p_coincidence, rows.front().p_coincidence);
  EXPECT_LE(std::abs(rows.back().p_pair_in_a - rows.back().p_pair_in_b), 0.01);
  for (std::size_t k = 1; k < rows.size(); ++k) {
    EXPECT_GT(rows[k].fidelity, rows[k - 1].fidelity);
    EXPECT_EQ(rows[k].cx_count, 2 * rows[k - 1].cx_count);
    EXPECT_EQ(rows[k].seed, c.seed + k);
  }
  // Sampled pair counts within 3 sigma of the analytic probabilities.
  for (const auto& row : rows) {
    for (auto [n, p] : {std::pair{row.n_pair_in_a, row.p_pair_in_a}, std::pair{row.n_pair_in_b, row.p_pair_in_b}}) {
      const double mean = p * c.shots;
      const double sigma = std::sqrt(c.shots * p * (1 - p));
      EXPECT_LE(std::abs(static_cast<double>(n) - mean), 3 * sigma + 1) << row.steps;
    }
  }
  EXPECT_EQ(rows, sweep_trotter(c, {1, 2, 4, 8, 16}));
  EXPECT_THROW(sweep_trotter(c, {}), std::invalid_argument);
  EXPECT_THROW(sweep_trotter(c, {1, 0}), std::invalid_argument);
}

TEST(sweep_theta, exact_curve) {
  const ExperimentConfig c;
  const auto rows = sweep_theta(c, {0.0, kPi / 8, kPi / 4});
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_NEAR(rows[0].p_coincidence, 1.0, 1e-12);
  EXPECT_NEAR(rows[1].p_coincidence, 0.5, 1e-12);
  EXPECT_NEAR(rows[2].p_coincidence, 0.0, 1e-12);
  for (const auto& r : sweep_theta(c, linspace(0, kPi / 2, 17))) {
    EXPECT_NEAR(r.p_coincidence, std::pow(std::cos(2 * r.theta), 2), 1e-9);
  }
  EXPECT_THROW(sweep_theta(c, {}), std::invalid_argument);
}

TEST(sweep_theta, circuit_path_uses_trotter_steps) {
  ExperimentConfig c;
  c.trotter_steps = 64;
  const auto rows = sweep_theta(c, {0.0, kPi / 8, kPi / 4}, true);
  EXPECT_NEAR(rows[0].p_coincidence, 1.0, 1e-12);
  EXPECT_NEAR(rows[1].p_coincidence, 0.5, 0.02);
  EXPECT_NEAR(rows[2].p_coincidence, 0.0, 0.01);
}

TEST(linspace, endpoints) {
  const auto g = linspace(0.0, 1.0, 5);
  EXPECT_EQ(g, (std::vector<double>{0.0, 0.25, 0.5, 0.75, 1.0}));
  EXPECT_EQ(linspace(2.0, 3.0, 1), std::vector<double>{2.0});
  EXPECT_THROW(linspace(0, 1, 0), std::invalid_argument);
}

TEST(circuit_report, full_and_reduced) {
  ExperimentConfig c;
  c.trotter_steps = 1;
  const auto r = circuit_report(c);
  ASSERT_EQ(r.variants.size(), 2u);
  EXPECT_EQ(r.variants[0].name, "full");
  EXPECT_EQ(r.variants[1].name, "reduced");
  EXPECT_LT(r.variants[1].metrics.cx_count, r.variants[0].metrics.cx_count);
  EXPECT_GE(r.variants[0].metrics.cx_count, 32u);
  EXPECT_LE(r.variants[0].metrics.cx_count, 512u);
  EXPECT_EQ(r, circuit_report(c));

  c.qubits_per_mode = 3;
  EXPECT_EQ(circuit_report(c).variants.size(), 1u);
  c.exact = true;
  EXPECT_THROW(circuit_report(c), std::invalid_argument);
}

TEST(config_hash, stable_and_sensitive) {
  ExperimentConfig a;
  ExperimentConfig b;
  EXPECT_EQ(config_hash(a), config_hash(b));
  EXPECT_EQ(config_hash(a).size(), 16u);
  b.seed += 1;
  EXPECT_NE(config_hash(a), config_hash(b));
}

TEST(csv, headers) {
  ExperimentConfig c;
  c.exact = true;
  const auto run_csv = to_csv(run_hom(c));
  EXPECT_EQ(run_csv.substr(0, run_csv.find('\n')), "label,probability,count");
  EXPECT_EQ(std::count(run_csv.begin(), run_csv.end(), '\n'), 17);
  const auto theta_csv = to_csv(sweep_theta(c, {0.0}));
  EXPECT_EQ(theta_csv, "theta,p_coincidence\n0,1\n");
}
