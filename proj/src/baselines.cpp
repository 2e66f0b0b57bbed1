#include "cfmtc/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "cfmtc/errors.hpp"

namespace cfmtc {

const char* to_string(BandwidthPolicy p) {
  switch (p) {
    case BandwidthPolicy::oba: return "oba";
    case BandwidthPolicy::tdma: return "tdma";
    case BandwidthPolicy::noma: return "noma";
    case BandwidthPolicy::rba: return "rba";
  }
  return "?";
}

const char* to_string(TaskPolicy p) {
  switch (p) {
    case TaskPolicy::oto: return "oto";
    case TaskPolicy::ro: return "ro";
    case TaskPolicy::sot: return "sot";
    case TaskPolicy::argmin: return "argmin";
  }
  return "?";
}

BandwidthPolicy bandwidth_policy_from_string(const std::string& name) {
  if (name == "oba") return BandwidthPolicy::oba;
  if (name == "tdma") return BandwidthPolicy::tdma;
  if (name == "noma") return BandwidthPolicy::noma;
  if (name == "rba") return BandwidthPolicy::rba;
  throw ConfigError("unknown bandwidth policy: " + name + " (want oba|tdma|noma|rba)");
}

TaskPolicy task_policy_from_string(const std::string& name) {
  if (name == "oto") return TaskPolicy::oto;
  if (name == "ro") return TaskPolicy::ro;
  if (name == "sot") return TaskPolicy::sot;
  if (name == "argmin") return TaskPolicy::argmin;
  throw ConfigError("unknown task policy: " + name + " (want oto|ro|sot|argmin)");
}

FirstHopRates tdma_policy(const Scenario& s, const ChannelRealization& real) {
  FirstHopRates rates;
  rates.delay_rate.resize(s.K);
  rates.energy_rate.resize(s.K);
  const double share = 1.0 / static_cast<double>(s.K);
  for (std::size_t k = 0; k < s.K; ++k) {
    const double full = s.B_hz * std::log2(1.0 + first_hop_snr(s, real, k));
    rates.delay_rate[k] = full * share;
    rates.energy_rate[k] = full;  // radio is off outside the own slot
  }
  return rates;
}

FirstHopRates noma_policy(const Scenario& s, const ChannelRealization& real) {
  const std::size_t K = s.K;
  std::vector<double> power(K);
  for (std::size_t k = 0; k < K; ++k) {
    power[k] = s.p_b_w * real.d[k] * std::norm(real.h[k]);
  }
  std::vector<std::size_t> order(K);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return power[a] > power[b];
  });

  // Users decoded later stay as interference for the current one.
  double residual = std::accumulate(power.begin(), power.end(), 0.0);
  FirstHopRates rates;
  rates.delay_rate.resize(K);
  for (std::size_t k : order) {
    residual -= power[k];
    rates.delay_rate[k] =
        s.B_hz * std::log2(1.0 + power[k] / (s.sigma2_first_w + residual));
  }
  rates.energy_rate = rates.delay_rate;
  return rates;
}

std::vector<double> random_bandwidth(const Scenario& s, Rng& rng) {
  std::vector<double> eta(s.K);
  double sum = 0.0;
  for (double& e : eta) {
    e = -std::log(1.0 - rng.uniform01());
    sum += e;
  }
  for (double& e : eta) e /= sum;
  return eta;
}

std::vector<int> random_offloading(const Scenario& s, Rng& rng) {
  std::vector<int> alpha(s.K);
  for (int& a : alpha) a = rng.coin() ? 1 : 0;
  return alpha;
}

}  // namespace cfmtc
