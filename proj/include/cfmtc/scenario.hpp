#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace cfmtc {

// One computational task: l bits, C cycles/bit, energy weight mu in [0,1]
// (mu=0 delay sensitive, mu=1 delay tolerant).
struct TaskSpec {
  double l_bits = 0.0;
  double cycles_per_bit = 0.0;
  double mu = 0.0;
  std::string label;
};

struct ComputeSpec {
  std::vector<double> f_fan_hz;           // per-FAN computing frequency
  std::vector<double> f_cpu_hz;           // per-task CPU core frequency
  double f_cpu_max_hz = 0.0;              // core frequency cap
  std::vector<double> p_cn_j_per_cycle;   // per-task local compute energy per cycle
};

// Distance-based power gain law: 1 at (and inside) the reference distance,
// (d_ref / d)^exponent beyond it.
struct PathLossLaw {
  double reference_m = 1.0;
  double exponent = 3.5;
};

struct PathLossParams {
  double d_ref_m = 1.0;
  double exponent = 3.5;        // TN -> FAN links
  double exponent_hop2 = 0.0;   // FAN -> CAN links; 0 gives beta == 1
  double extent_m = 300.0;      // side of the square deployment area

  PathLossLaw first_hop() const { return {d_ref_m, exponent}; }
  PathLossLaw second_hop() const { return {d_ref_m, exponent_hop2}; }
};

// All static system parameters.  K TN/FAN pairs, M CANs.
struct Scenario {
  std::size_t K = 0;
  std::size_t M = 0;
  double B_hz = 0.0;             // total first-hop bandwidth
  double p_b_w = 0.0;            // TN transmit power
  std::vector<double> q_w;       // per-FAN transmit power, length K
  double rho = 1.0;              // normalized uplink SNR
  double tau_d = 0.0;            // CSI error coefficient in [0, 1]
  double sigma2_first_w = 1.0;   // first-hop noise variance per FAN
  double sigma2 = 1.0;           // second-hop noise variance
  PathLossParams pathloss;
  std::vector<TaskSpec> tasks;   // length K
  ComputeSpec compute;
  std::vector<double> w;         // per-task weighting factors, length K
  std::uint64_t seed = 0;

  double cond_threshold = 1e8;   // detector singularity guard
  int resample_cap = 16;         // ill-conditioned draw retries per trial
};

// Throws ConfigError naming the offending field.
void validate(const Scenario& scenario);

// FNV-1a over a canonical text serialization; used to tag trial results.
std::uint64_t scenario_hash(const Scenario& scenario);

double total_q(const Scenario& scenario);

}  // namespace cfmtc
