#include "cfmtc/allocation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "cfmtc/bandwidth.hpp"
#include "cfmtc/errors.hpp"

namespace cfmtc {

std::vector<int> threshold_allocation(const Scenario& s, const SinrReport& sinr) {
  std::vector<int> alpha(s.K, 0);
  for (std::size_t k = 0; k < s.K; ++k) {
    alpha[k] = offload_delta(s, sinr, k) < 0.0 ? 1 : 0;
  }
  return alpha;
}

std::vector<int> argmin_allocation(const Scenario& s, const SinrReport& sinr,
                                   double psi) {
  std::size_t best = 0;
  double best_val = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < s.K; ++k) {
    const double v = offload_delta(s, sinr, k) + psi;
    if (v < best_val) {
      best_val = v;
      best = k;
    }
  }
  std::vector<int> alpha(s.K, 0);
  alpha[best] = 1;
  return alpha;
}

DualResult dual_allocation(const Scenario& s, const SinrReport& sinr, double psi0,
                           double step_scale, std::size_t max_iters) {
  if (psi0 < 0.0 || step_scale <= 0.0) {
    throw std::invalid_argument("dual_allocation: psi0 must be >= 0 and step_scale > 0");
  }
  const std::vector<double> delta = offload_deltas(s, sinr);
  const double k_count = static_cast<double>(s.K);

  DualResult result;
  double psi = psi0;
  for (std::size_t t = 1; t <= max_iters; ++t) {
    int count = 0;
    result.alpha.assign(s.K, 0);
    for (std::size_t k = 0; k < s.K; ++k) {
      if (delta[k] + psi < 0.0) {
        result.alpha[k] = 1;
        ++count;
      }
    }
    result.trace.push_back({psi, count});
    result.iterations = t;

    const double subgradient = static_cast<double>(count) - k_count;
    // psi == 0 reproduces the threshold rule; zero subgradient means every
    // task offloads even under the current penalty, which the threshold rule
    // also selects.  Either way the dual has converged.
    if (psi == 0.0 || subgradient == 0.0) {
      result.converged = true;
      break;
    }
    psi = std::max(0.0, psi + step_scale / static_cast<double>(t) * subgradient);
  }
  return result;
}

namespace {

BruteForceResult brute_force_search(const Scenario& s, const FirstHopRates& rates,
                                    const std::vector<double>& gamma) {
  if (s.K > 20) {
    throw CapacityError("brute_force_allocation: K = " + std::to_string(s.K) +
                        " exceeds the 2^20 enumeration guard; use the threshold rule");
  }
  for (std::size_t k = 0; k < s.K; ++k) {
    if (!(rates.delay_rate[k] > 0.0)) {
      throw InfeasibleError("brute_force_allocation: task " + std::to_string(k) +
                            " has zero first-hop rate");
    }
  }
  const std::size_t n = std::size_t{1} << s.K;
  BruteForceResult best;
  best.omega_total = std::numeric_limits<double>::infinity();
  std::vector<int> alpha(s.K, 0);
  // alpha[0] maps to the top bit so ascending masks scan in lexicographic
  // order; keeping the first strict minimum ties toward the smallest alpha.
  for (std::size_t mask = 0; mask < n; ++mask) {
    for (std::size_t k = 0; k < s.K; ++k) {
      alpha[k] = (mask >> (s.K - 1 - k)) & 1u;
    }
    double omega;
    try {
      omega = evaluate_with_rates(s, rates, gamma, alpha).omega_total;
    } catch (const InfeasibleError&) {
      continue;  // offloading with zero SINR; candidate is unusable
    }
    if (omega < best.omega_total) {
      best.omega_total = omega;
      best.alpha = alpha;
    }
  }
  if (best.alpha.empty()) {
    throw InfeasibleError("brute_force_allocation: no feasible offloading vector");
  }
  return best;
}

}  // namespace

BruteForceResult brute_force_allocation(const Scenario& s,
                                        const ChannelRealization& real) {
  const std::vector<double> eta = optimal_bandwidth(s, real);
  const SinrReport report = analyze(s, real);
  return brute_force_search(s, fdma_rates(s, real, eta), report.gamma_exact);
}

BruteForceResult brute_force_allocation(const Scenario& s, const FirstHopRates& rates,
                                        const std::vector<double>& gamma) {
  return brute_force_search(s, rates, gamma);
}

CornerCaseVerdict corner_case_check(const Scenario& s, const SinrReport& sinr) {
  const double mu0 = s.tasks.front().mu;
  if (mu0 != 0.0 && mu0 != 1.0) {
    throw std::invalid_argument("corner_case_check: needs mu identically 0 or 1");
  }
  for (const TaskSpec& t : s.tasks) {
    if (t.mu != mu0) {
      throw std::invalid_argument("corner_case_check: mixed mu values");
    }
  }

  CornerCaseVerdict verdict;
  verdict.delay_tolerant = mu0 == 1.0;
  verdict.operand = offload_deltas(s, sinr);
  verdict.threshold_alpha = threshold_allocation(s, sinr);

  if (verdict.delay_tolerant) {
    // Remote wins per task when the second-hop transmission energy undercuts
    // the local per-cycle energy bill.
    verdict.offload_cheaper.resize(s.K);
    bool all_cheaper = true;
    for (std::size_t k = 0; k < s.K; ++k) {
      verdict.offload_cheaper[k] = verdict.operand[k] < 0.0 ? 1 : 0;
      all_cheaper = all_cheaper && verdict.offload_cheaper[k];
    }
    bool all_offload = true;
    for (int a : verdict.threshold_alpha) all_offload = all_offload && a == 1;
    verdict.claim_holds = !all_cheaper || all_offload;
    return verdict;
  }

  std::size_t argmin = 0;
  for (std::size_t k = 1; k < s.K; ++k) {
    if (verdict.operand[k] < verdict.operand[argmin]) argmin = k;
  }
  std::size_t slowest = 0;
  for (std::size_t k = 1; k < s.K; ++k) {
    if (s.compute.f_fan_hz[k] < s.compute.f_fan_hz[slowest]) slowest = k;
  }
  verdict.argmin_index = static_cast<int>(argmin);
  verdict.min_f_fan_index = static_cast<int>(slowest);
  verdict.claim_holds = argmin == slowest;
  return verdict;
}

}  // namespace cfmtc
