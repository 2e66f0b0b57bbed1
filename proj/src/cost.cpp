#include "cfmtc/cost.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "cfmtc/errors.hpp"

namespace cfmtc {

namespace {

void check_allocation(const Scenario& s, const Allocation& a) {
  if (a.eta.size() != s.K || a.alpha.size() != s.K) {
    throw ConfigError("allocation: eta and alpha must have length K");
  }
  double sum = 0.0;
  for (double e : a.eta) {
    if (!(e > 0.0) || e > 1.0) {
      throw InfeasibleError("allocation: eta entries must lie in (0, 1]");
    }
    sum += e;
  }
  if (std::abs(sum - 1.0) > 1e-9) {
    throw InfeasibleError("allocation: eta must sum to 1, got " + std::to_string(sum));
  }
}

}  // namespace

double first_hop_rate(double eta, double B_hz, double snr) {
  if (eta <= 0.0) {
    throw InfeasibleError("first_hop_rate: eta = 0 makes the transmission delay infinite");
  }
  return eta * B_hz * std::log2(1.0 + snr);
}

FirstHopRates fdma_rates(const Scenario& s, const ChannelRealization& real,
                         const std::vector<double>& eta) {
  FirstHopRates rates;
  rates.delay_rate.resize(s.K);
  for (std::size_t k = 0; k < s.K; ++k) {
    rates.delay_rate[k] = first_hop_rate(eta[k], s.B_hz, first_hop_snr(s, real, k));
  }
  rates.energy_rate = rates.delay_rate;
  return rates;
}

CostBreakdown evaluate(const Scenario& s, const ChannelRealization& real,
                       const SinrReport& sinr, const Allocation& allocation) {
  check_allocation(s, allocation);
  return evaluate_with_rates(s, fdma_rates(s, real, allocation.eta),
                             sinr.gamma_exact, allocation.alpha);
}

CostBreakdown evaluate_with_rates(const Scenario& s, const FirstHopRates& rates,
                                  const std::vector<double>& gamma,
                                  const std::vector<int>& alpha) {
  CostBreakdown out;
  out.tasks.resize(s.K);
  for (std::size_t k = 0; k < s.K; ++k) {
    const TaskSpec& task = s.tasks[k];
    TaskCost& c = out.tasks[k];

    if (!(rates.delay_rate[k] > 0.0)) {
      throw InfeasibleError("task " + std::to_string(k) +
                            ": first-hop rate is zero, transmission can never finish");
    }
    c.t_tn = task.l_bits / rates.delay_rate[k];
    c.e_tn = s.p_b_w * task.l_bits / rates.energy_rate[k];

    const double cycles = task.cycles_per_bit * task.l_bits;
    if (alpha[k] != 0) {
      if (!(gamma[k] > 0.0)) {
        throw InfeasibleError("task " + std::to_string(k) +
                              ": offloading with zero second-hop SINR");
      }
      const double r2 = s.B_hz * std::log2(1.0 + gamma[k]);
      c.t_hop2 = task.l_bits / r2;
      c.e_fan = s.q_w[k] * c.t_hop2;
      c.t_comp_c = cycles / s.compute.f_cpu_hz[k];
    } else {
      c.t_comp_f = cycles / s.compute.f_fan_hz[k];
      c.e_re = cycles * s.compute.p_cn_j_per_cycle[k];
    }

    c.e_total = c.e_tn + c.e_re + c.e_fan;
    c.t_total = c.t_tn + c.t_comp_f + c.t_hop2 + c.t_comp_c;
    c.omega = task.mu * c.e_total + (1.0 - task.mu) * c.t_total;

    out.omega_total += s.w[k] * c.omega;
    out.energy_total += c.e_total;
    out.delay_total += c.t_total;
  }
  return out;
}

double offload_delta(const Scenario& s, const SinrReport& sinr, std::size_t k) {
  const TaskSpec& task = s.tasks[k];
  const double gamma = sinr.gamma_exact[k];
  if (!(gamma > 0.0)) return std::numeric_limits<double>::infinity();

  const double r2 = s.B_hz * std::log2(1.0 + gamma);
  const double l = task.l_bits;
  const double cl = task.cycles_per_bit * l;
  const double delay_part =
      l / r2 + cl / s.compute.f_cpu_hz[k] - cl / s.compute.f_fan_hz[k];
  const double energy_part =
      s.q_w[k] * l / r2 - cl * s.compute.p_cn_j_per_cycle[k];
  return (1.0 - task.mu) * delay_part + task.mu * energy_part;
}

std::vector<double> offload_deltas(const Scenario& s, const SinrReport& sinr) {
  std::vector<double> out(s.K);
  for (std::size_t k = 0; k < s.K; ++k) out[k] = offload_delta(s, sinr, k);
  return out;
}

}  // namespace cfmtc
