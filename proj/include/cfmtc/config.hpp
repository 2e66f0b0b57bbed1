#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cfmtc/baselines.hpp"
#include "cfmtc/scenario.hpp"

namespace cfmtc {

// Per-task parameter given in the config either directly or as a seeded
// distribution that is resolved when the scenario is materialized:
//   scalar          4.0e6
//   list            1.0,2.0,3.0      (length must equal K)
//   uniform(lo,hi)  uniform(500,1500)
//   choice(...)     choice(2e8,3e8,4e8)
struct FieldSpec {
  enum class Kind { scalar, list, uniform, choice };
  Kind kind = Kind::scalar;
  double scalar = 0.0;
  std::vector<double> values;
  double lo = 0.0, hi = 0.0;
};

struct PolicyPair {
  BandwidthPolicy bw = BandwidthPolicy::oba;
  TaskPolicy task = TaskPolicy::oto;
};

std::string to_string(PolicyPair p);
PolicyPair policy_pair_from_string(const std::string& text);  // "oba+oto"

// Parsed configuration: a scenario template plus experiment settings.
struct RunConfig {
  std::size_t K = 0, M = 0;
  double B_hz = 0.0, p_b_w = 0.0, rho = 0.0, tau_d = 0.0;
  double sigma2 = 0.0, sigma2_first_w = 0.0;
  FieldSpec q_w, l_bits, cycles_per_bit, mu, w;
  FieldSpec f_fan_hz, f_cpu_hz, p_cn_j_per_cycle;
  double f_cpu_max_hz = 0.0;
  PathLossParams pathloss;

  std::size_t trials = 1;
  std::uint64_t seed = 0;
  std::vector<PolicyPair> policies;
  double cond_threshold = 1e8;
  int resample_cap = 16;
};

RunConfig parse_config_text(const std::string& text);
RunConfig load_config(const std::string& path);

// The scenario shipped as configs/default.ini; embedded so tests and the CLI
// agree on one source of truth.
const std::string& default_config_text();

// Sweep-axis substitutions applied during materialization.
struct ScenarioOverrides {
  std::optional<std::size_t> K;
  std::optional<std::size_t> M;
  std::optional<double> l_bits;
  std::optional<double> mu;
};

// Resolves all field specs into a concrete validated Scenario.  Per-task
// draws are keyed by (seed, field, task index), so task k keeps its values
// when only K, M or an override changes.
Scenario materialize(const RunConfig& config, const ScenarioOverrides& overrides = {});

}  // namespace cfmtc
