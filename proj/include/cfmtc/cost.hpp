#pragma once

#include <vector>

#include "cfmtc/channel.hpp"
#include "cfmtc/detection.hpp"
#include "cfmtc/scenario.hpp"

namespace cfmtc {

// Bandwidth fractions (sum to 1) and binary offloading decisions.
// alpha_k = 0: compute at the paired FAN; alpha_k = 1: relay to the CPU.
struct Allocation {
  std::vector<double> eta;
  std::vector<int> alpha;
};

struct TaskCost {
  double t_tn = 0.0;      // first-hop transmission delay
  double e_tn = 0.0;      // first-hop transmission energy
  double t_hop2 = 0.0;    // second-hop transmission delay (offloaded only)
  double e_fan = 0.0;     // second-hop transmission energy (offloaded only)
  double t_comp_f = 0.0;  // FAN compute delay (local only)
  double t_comp_c = 0.0;  // CPU compute delay (offloaded only)
  double e_re = 0.0;      // FAN compute energy (local only)
  double e_total = 0.0;   // e_tn + e_re + e_fan
  double t_total = 0.0;   // t_tn + t_comp_f + t_hop2 + t_comp_c
  double omega = 0.0;     // mu * e_total + (1 - mu) * t_total
};

struct CostBreakdown {
  std::vector<TaskCost> tasks;
  double omega_total = 0.0;   // sum_k w_k * omega_k
  double energy_total = 0.0;  // sum_k e_total_k (unweighted)
  double delay_total = 0.0;   // sum_k t_total_k (unweighted)
};

// Per-task effective first-hop rates.  delay_rate drives the transmission
// delay, energy_rate the airtime that is charged at p_b.  FDMA policies use
// the same value for both; TDMA charges airtime at the full-band rate.
struct FirstHopRates {
  std::vector<double> delay_rate;
  std::vector<double> energy_rate;
};

// r = eta * B * log2(1 + snr).  Throws InfeasibleError when eta == 0.
double first_hop_rate(double eta, double B_hz, double snr);

FirstHopRates fdma_rates(const Scenario& scenario, const ChannelRealization& real,
                         const std::vector<double>& eta);

CostBreakdown evaluate(const Scenario& scenario, const ChannelRealization& real,
                       const SinrReport& sinr, const Allocation& allocation);

CostBreakdown evaluate_with_rates(const Scenario& scenario, const FirstHopRates& rates,
                                  const std::vector<double>& gamma,
                                  const std::vector<int>& alpha);

// Cost change of flipping task k to remote compute, independent of eta:
// offload_delta == omega_k(alpha_k=1) - omega_k(alpha_k=0).
// Returns +infinity when gamma_k == 0.
double offload_delta(const Scenario& scenario, const SinrReport& sinr, std::size_t k);
std::vector<double> offload_deltas(const Scenario& scenario, const SinrReport& sinr);

}  // namespace cfmtc
