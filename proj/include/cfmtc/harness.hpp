#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cfmtc/config.hpp"
#include "cfmtc/scenario.hpp"

namespace cfmtc {

// Sweepable parameters: l_bits, mu, K, M.  "none" runs the base scenario.
// A nonzero seed overrides the config's base seed for the whole sweep.
struct SweepSpec {
  std::string axis = "none";
  std::vector<double> values = {0.0};
  std::vector<PolicyPair> policies;
  std::size_t trials = 1;
  std::uint64_t seed = 0;
};

struct TrialResult {
  std::uint64_t scenario_hash = 0;
  std::string axis;
  std::size_t axis_index = 0;
  double axis_value = 0.0;
  PolicyPair policy;
  std::uint64_t trial = 0;

  double omega_total = 0.0;
  double energy_j = 0.0;
  double delay_s = 0.0;
  std::vector<int> alpha;
  std::vector<double> eta;  // empty under tdma/noma
  double gamma_min = 0.0, gamma_mean = 0.0, gamma_max = 0.0;
  std::uint32_t resamples = 0;

  bool failed = false;
  std::string error;
};

struct AggregateRow {
  std::string axis;
  double axis_value = 0.0;
  PolicyPair policy;
  std::size_t trials = 0;  // successful trials
  double omega_mean = 0.0;
  double omega_ci95 = 0.0;
  double energy_mean = 0.0;
  double delay_mean = 0.0;
};

struct ResultTable {
  std::string axis;
  std::vector<TrialResult> rows;
  std::vector<AggregateRow> aggregates;
};

// Full pipeline for one trial: sample (resampling ill-conditioned draws up to
// the scenario cap) -> detect -> bandwidth policy -> task policy -> evaluate.
// Deterministic in (scenario, policy, trial_index).  Channel and policy
// randomness are keyed by the trial alone: every policy sees the same
// realization, and trials stay paired across sweep points.
TrialResult run_trial(const Scenario& scenario, PolicyPair policy,
                      std::uint64_t trial_index);

ResultTable run_sweep(const RunConfig& config, const SweepSpec& spec);

// RFC-4180-style CSV.  path must end in ".csv"; aggregates land next to it
// with the ".agg.csv" suffix.  Identical tables produce byte-identical files.
void emit_csv(const ResultTable& table, const std::string& path);

// Plain-text gnuplot script plotting omega_mean from the aggregate file.
void emit_plot_script(const ResultTable& table, const std::string& csv_path,
                      const std::string& script_path);

AggregateRow recompute_aggregate(const ResultTable& table, std::size_t axis_index,
                                 PolicyPair policy);

}  // namespace cfmtc
