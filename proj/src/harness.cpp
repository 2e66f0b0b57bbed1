#include "cfmtc/harness.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>

#include "cfmtc/allocation.hpp"
#include "cfmtc/bandwidth.hpp"
#include "cfmtc/channel.hpp"
#include "cfmtc/cost.hpp"
#include "cfmtc/detection.hpp"
#include "cfmtc/errors.hpp"
#include "cfmtc/rng.hpp"
#include "cfmtc/stats.hpp"

namespace cfmtc {

namespace {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string alpha_bits(const std::vector<int>& alpha) {
  std::string out;
  out.reserve(alpha.size());
  for (int a : alpha) out.push_back(a ? '1' : '0');
  return out;
}

ScenarioOverrides overrides_for(const std::string& axis, double value) {
  ScenarioOverrides o;
  if (axis == "none") return o;
  if (axis == "l_bits") {
    o.l_bits = value;
  } else if (axis == "mu") {
    o.mu = value;
  } else if (axis == "K") {
    o.K = static_cast<std::size_t>(value);
  } else if (axis == "M") {
    o.M = static_cast<std::size_t>(value);
  } else {
    throw ConfigError("unknown sweep axis: " + axis + " (want l_bits|mu|K|M)");
  }
  return o;
}

}  // namespace

TrialResult run_trial(const Scenario& s, PolicyPair policy, std::uint64_t trial) {
  TrialResult r;
  r.scenario_hash = scenario_hash(s);
  r.policy = policy;
  r.trial = trial;

  try {
    // Ill-conditioned estimates are resampled and counted, never regularized.
    ChannelRealization real;
    SinrReport report;
    std::uint32_t attempt = 0;
    for (;; ++attempt) {
      if (attempt >= static_cast<std::uint32_t>(s.resample_cap)) {
        throw SingularMatrixError(
            "run_trial: resample cap exhausted on ill-conditioned draws",
            std::numeric_limits<double>::infinity());
      }
      real = sample_realization(s, trial, attempt);
      try {
        report = analyze(s, real);
        break;
      } catch (const SingularMatrixError&) {
        continue;
      }
    }
    r.resamples = attempt;

    FirstHopRates rates;
    switch (policy.bw) {
      case BandwidthPolicy::oba:
        r.eta = optimal_bandwidth(s, real);
        rates = fdma_rates(s, real, r.eta);
        break;
      case BandwidthPolicy::rba: {
        Rng rng(derive_key({s.seed, kTagRandomBandwidth, trial}));
        r.eta = random_bandwidth(s, rng);
        rates = fdma_rates(s, real, r.eta);
        break;
      }
      case BandwidthPolicy::tdma:
        rates = tdma_policy(s, real);
        break;
      case BandwidthPolicy::noma:
        rates = noma_policy(s, real);
        break;
    }

    switch (policy.task) {
      case TaskPolicy::oto:
        r.alpha = threshold_allocation(s, report);
        break;
      case TaskPolicy::sot:
        r.alpha = brute_force_allocation(s, rates, report.gamma_exact).alpha;
        break;
      case TaskPolicy::ro: {
        Rng rng(derive_key({s.seed, kTagRandomOffloading, trial}));
        r.alpha = random_offloading(s, rng);
        break;
      }
      case TaskPolicy::argmin:
        r.alpha = argmin_allocation(s, report);
        break;
    }

    const CostBreakdown cost = evaluate_with_rates(s, rates, report.gamma_exact, r.alpha);
    r.omega_total = cost.omega_total;
    r.energy_j = cost.energy_total;
    r.delay_s = cost.delay_total;

    r.gamma_min = report.gamma_exact.front();
    r.gamma_max = report.gamma_exact.front();
    double sum = 0.0;
    for (double g : report.gamma_exact) {
      r.gamma_min = std::min(r.gamma_min, g);
      r.gamma_max = std::max(r.gamma_max, g);
      sum += g;
    }
    r.gamma_mean = sum / static_cast<double>(s.K);
  } catch (const std::exception& e) {
    r.failed = true;
    r.error = e.what();
    r.omega_total = r.energy_j = r.delay_s = std::numeric_limits<double>::quiet_NaN();
  }
  return r;
}

ResultTable run_sweep(const RunConfig& config, const SweepSpec& spec) {
  if (spec.values.empty()) throw ConfigError("sweep: values must be non-empty");
  for (std::size_t i = 1; i < spec.values.size(); ++i) {
    if (!(spec.values[i] > spec.values[i - 1]) && spec.axis != "none") {
      throw ConfigError("sweep: values must be strictly increasing");
    }
  }
  if (spec.trials < 1) throw ConfigError("sweep: trials must be >= 1");

  RunConfig cfg = config;
  if (spec.seed != 0) cfg.seed = spec.seed;

  ResultTable table;
  table.axis = spec.axis;
  const std::vector<PolicyPair>& policies =
      spec.policies.empty() ? cfg.policies : spec.policies;

  for (std::size_t vi = 0; vi < spec.values.size(); ++vi) {
    const Scenario scenario = materialize(cfg, overrides_for(spec.axis, spec.values[vi]));
    for (const PolicyPair& policy : policies) {
      for (std::uint64_t t = 0; t < spec.trials; ++t) {
        TrialResult r = run_trial(scenario, policy, t);
        r.axis = spec.axis;
        r.axis_index = vi;
        r.axis_value = spec.values[vi];
        table.rows.push_back(std::move(r));
      }
      table.aggregates.push_back(recompute_aggregate(table, vi, policy));
    }
  }
  return table;
}

AggregateRow recompute_aggregate(const ResultTable& table, std::size_t axis_index,
                                 PolicyPair policy) {
  std::vector<double> omegas, energies, delays;
  AggregateRow agg;
  agg.axis = table.axis;
  agg.policy = policy;
  for (const TrialResult& r : table.rows) {
    if (r.axis_index != axis_index || r.failed) continue;
    if (r.policy.bw != policy.bw || r.policy.task != policy.task) continue;
    agg.axis_value = r.axis_value;
    omegas.push_back(r.omega_total);
    energies.push_back(r.energy_j);
    delays.push_back(r.delay_s);
  }
  agg.trials = omegas.size();
  agg.omega_mean = stats::mean(omegas);
  agg.omega_ci95 = stats::ci95_halfwidth(omegas);
  agg.energy_mean = stats::mean(energies);
  agg.delay_mean = stats::mean(delays);
  return agg;
}

void emit_csv(const ResultTable& table, const std::string& path) {
  std::ofstream raw(path, std::ios::binary);
  if (!raw) throw IoError("emit_csv: cannot open " + path);
  raw << "axis,axis_value,bw_policy,task_policy,trial,omega_total,energy_j,delay_s,"
         "alpha_bits,resamples\n";
  for (const TrialResult& r : table.rows) {
    raw << r.axis << ',' << format_double(r.axis_value) << ',' << to_string(r.policy.bw)
        << ',' << to_string(r.policy.task) << ',' << r.trial << ','
        << format_double(r.omega_total) << ',' << format_double(r.energy_j) << ','
        << format_double(r.delay_s) << ',' << alpha_bits(r.alpha) << ',' << r.resamples
        << '\n';
  }
  if (!raw.flush()) throw IoError("emit_csv: write failed for " + path);

  std::string agg_path = path;
  if (agg_path.size() >= 4 && agg_path.substr(agg_path.size() - 4) == ".csv") {
    agg_path = agg_path.substr(0, agg_path.size() - 4);
  }
  agg_path += ".agg.csv";
  std::ofstream agg(agg_path, std::ios::binary);
  if (!agg) throw IoError("emit_csv: cannot open " + agg_path);
  agg << "axis,axis_value,bw_policy,task_policy,trials,omega_mean,omega_ci95,"
         "energy_mean,delay_mean\n";
  for (const AggregateRow& a : table.aggregates) {
    agg << a.axis << ',' << format_double(a.axis_value) << ',' << to_string(a.policy.bw)
        << ',' << to_string(a.policy.task) << ',' << a.trials << ','
        << format_double(a.omega_mean) << ',' << format_double(a.omega_ci95) << ','
        << format_double(a.energy_mean) << ',' << format_double(a.delay_mean) << '\n';
  }
  if (!agg.flush()) throw IoError("emit_csv: write failed for " + agg_path);
}

void emit_plot_script(const ResultTable& table, const std::string& csv_path,
                      const std::string& script_path) {
  // The script sits next to the CSVs; reference them by file name so the
  // output directory is relocatable and runs compare byte-for-byte.
  std::string agg_path =
      std::filesystem::path(csv_path).filename().string();
  if (agg_path.size() >= 4 && agg_path.substr(agg_path.size() - 4) == ".csv") {
    agg_path = agg_path.substr(0, agg_path.size() - 4);
  }
  agg_path += ".agg.csv";

  std::vector<std::string> names;
  for (const AggregateRow& a : table.aggregates) {
    const std::string name = to_string(a.policy);
    bool seen = false;
    for (const std::string& n : names) seen = seen || n == name;
    if (!seen) names.push_back(name);
  }

  std::ofstream out(script_path, std::ios::binary);
  if (!out) throw IoError("emit_plot_script: cannot open " + script_path);
  out << "# gnuplot script; run from this directory: gnuplot " << std::filesystem::path(script_path).filename().string() << "\n"
      << "set datafile separator ','\n"
      << "set key outside\n"
      << "set xlabel '" << table.axis << "'\n"
      << "set ylabel 'mean total cost'\n"
      << "set grid\n"
      << "plot ";
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i) out << ", \\\n     ";
    out << "'" << agg_path << "' using 2:((strcol(3).'+'.strcol(4)) eq '" << names[i]
        << "' ? $6 : 1/0) with linespoints title '" << names[i] << "'";
  }
  out << "\n";
}

}  // namespace cfmtc
