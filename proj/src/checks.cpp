#include "cfmtc/checks.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <vector>

#include "cfmtc/allocation.hpp"
#include "cfmtc/bandwidth.hpp"
#include "cfmtc/channel.hpp"
#include "cfmtc/cost.hpp"
#include "cfmtc/detection.hpp"
#include "cfmtc/rng.hpp"
#include "cfmtc/stats.hpp"

namespace cfmtc {

namespace {

constexpr std::uint64_t kTagBandwidthCheck = 101;
constexpr std::uint64_t kTagAllocationCheck = 102;
constexpr std::uint64_t kTagDeltaCheck = 103;
constexpr std::uint64_t kTagCornerCheck = 105;

class Timer {
 public:
  Timer() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

std::string fmt(const char* pattern, double a, double b = 0.0) {
  char buf[160];
  std::snprintf(buf, sizeof(buf), pattern, a, b);
  return buf;
}

}  // namespace

Scenario make_check_scenario(std::uint64_t key, std::size_t K, std::size_t M) {
  Rng rng(derive_key({key, kTagCheckScenario}));
  Scenario s;
  s.K = K;
  s.M = M;
  s.B_hz = 1e7;
  s.p_b_w = rng.uniform(1.0, 10.0);
  s.rho = 1.0;
  s.tau_d = rng.uniform(0.0, 0.3);
  s.sigma2 = 1.0;
  s.sigma2_first_w = 1e-8;
  s.pathloss = PathLossParams{1.0, 3.5, 0.0, 300.0};
  s.seed = rng.bits();
  s.q_w.resize(K);
  s.w.resize(K);
  s.tasks.resize(K);
  s.compute.f_fan_hz.resize(K);
  s.compute.f_cpu_hz.resize(K);
  s.compute.p_cn_j_per_cycle.resize(K);
  s.compute.f_cpu_max_hz = 1e10;
  for (std::size_t k = 0; k < K; ++k) {
    s.q_w[k] = rng.uniform(0.1, 0.5);
    s.w[k] = rng.uniform(0.5, 2.0);
    s.tasks[k].l_bits = rng.uniform(1e6, 8e6);
    s.tasks[k].cycles_per_bit = rng.uniform(500.0, 1500.0);
    s.tasks[k].mu = rng.uniform01();
    s.tasks[k].label = "task" + std::to_string(k);
    s.compute.f_fan_hz[k] = (2.0 + static_cast<double>(rng.below(7))) * 1e8;
    s.compute.f_cpu_hz[k] = rng.uniform(2e9, 8e9);
    s.compute.p_cn_j_per_cycle[k] = rng.uniform(0.0, 2e-10);
  }
  validate(s);
  return s;
}

CheckResult check_bandwidth_optimality(std::uint64_t seed) {
  Timer timer;
  double worst = 0.0;
  for (std::uint64_t i = 0; i < 100; ++i) {
    const std::size_t K = 2 + static_cast<std::size_t>(i % 15);
    const Scenario s =
        make_check_scenario(derive_key({seed, kTagBandwidthCheck, i}), K, 2 * K + 8);
    const ChannelRealization real = sample_realization(s, i);
    const std::vector<double> c = bandwidth_coefficients(s, real);
    const std::vector<double> closed = optimal_bandwidth_from_coefficients(c);
    const std::vector<double> oracle = bandwidth_oracle_from_coefficients(c);
    for (std::size_t k = 0; k < K; ++k) {
      worst = std::max(worst, std::abs(closed[k] - oracle[k]));
    }
  }
  CheckResult r;
  r.name = "bandwidth optimality (closed form vs oracle)";
  r.seconds = timer.seconds();
  r.pass = worst < 1e-6 && r.seconds < 10.0;
  r.detail = fmt("max coordinate gap %.3g over 100 scenarios, %.2fs", worst, r.seconds);
  return r;
}

CheckResult check_task_allocation_optimality(std::uint64_t seed) {
  Timer timer;
  std::size_t mismatches = 0;
  for (std::uint64_t i = 0; i < 200; ++i) {
    const std::size_t K = 4 + static_cast<std::size_t>(i % 9);
    const Scenario s =
        make_check_scenario(derive_key({seed, kTagAllocationCheck, i}), K, 2 * K + 16);
    const ChannelRealization real = sample_realization(s, i);
    const SinrReport report = analyze(s, real);
    const std::vector<int> threshold = threshold_allocation(s, report);
    const std::vector<int> dual = dual_allocation(s, report, 10.0).alpha;
    const BruteForceResult brute = brute_force_allocation(s, real);
    if (threshold != brute.alpha || dual != brute.alpha) ++mismatches;
  }
  CheckResult r;
  r.name = "task allocation optimality (threshold/dual vs exhaustive)";
  r.seconds = timer.seconds();
  r.pass = mismatches == 0 && r.seconds < 60.0;
  r.detail = fmt("%g mismatches over 200 scenarios, %.2fs",
                 static_cast<double>(mismatches), r.seconds);
  return r;
}

CheckResult check_delta_identity(std::uint64_t seed) {
  Timer timer;
  double worst = 0.0;
  for (std::uint64_t i = 0; i < 50; ++i) {
    const std::size_t K = 2 + static_cast<std::size_t>(i % 11);
    const Scenario s =
        make_check_scenario(derive_key({seed, kTagDeltaCheck, i}), K, 2 * K + 8);
    const ChannelRealization real = sample_realization(s, i);
    const SinrReport report = analyze(s, real);
    Allocation alloc;
    alloc.eta = optimal_bandwidth(s, real);
    alloc.alpha.assign(K, 0);
    for (std::size_t k = 0; k < K; ++k) {
      alloc.alpha[k] = 0;
      const double omega0 = evaluate(s, real, report, alloc).tasks[k].omega;
      alloc.alpha[k] = 1;
      const double omega1 = evaluate(s, real, report, alloc).tasks[k].omega;
      alloc.alpha[k] = 0;
      const double delta = offload_delta(s, report, k);
      const double scale =
          std::max({std::abs(omega0), std::abs(omega1), std::abs(delta)});
      worst = std::max(worst, std::abs(delta - (omega1 - omega0)) / scale);
    }
  }
  CheckResult r;
  r.name = "offload delta identity (regrouped vs finite difference)";
  r.seconds = timer.seconds();
  r.pass = worst < 1e-10;
  r.detail = fmt("max relative gap %.3g over 50 scenarios, %.2fs", worst, r.seconds);
  return r;
}

CheckResult check_asymptotic_convergence(std::uint64_t seed) {
  Timer timer;
  const std::size_t K = 8;
  const std::vector<std::size_t> m_values = {32, 64, 128, 256};
  const std::size_t trials = 1000;

  Scenario s = make_check_scenario(derive_key({seed, 104}), K, m_values.front());
  s.tau_d = 0.1;
  s.rho = 1.0;
  s.sigma2 = 1.0;
  std::fill(s.q_w.begin(), s.q_w.end(), 0.2);
  s.pathloss.exponent_hop2 = 0.0;  // beta == 1

  std::vector<double> medians;
  for (const std::size_t m : m_values) {
    s.M = m;
    std::vector<double> per_trial(trials);
    for (std::size_t t = 0; t < trials; ++t) {
      const ChannelRealization real = sample_realization(s, t);
      const SinrReport report = analyze(s, real);
      per_trial[t] = stats::median(report.relative_gap);
    }
    medians.push_back(stats::median(per_trial));
  }

  bool monotone = true;
  for (std::size_t i = 1; i < medians.size(); ++i) {
    monotone = monotone && medians[i] <= medians[i - 1];
  }
  CheckResult r;
  r.name = "asymptotic SINR convergence in M";
  r.seconds = timer.seconds();
  r.pass = monotone && medians.back() < 0.10 && r.seconds < 120.0;
  char buf[200];
  std::snprintf(buf, sizeof(buf),
                "median gap M=32:%.3f M=64:%.3f M=128:%.3f M=256:%.3f, %.1fs",
                medians[0], medians[1], medians[2], medians[3], r.seconds);
  r.detail = buf;
  return r;
}

CheckResult check_allocation_corners(std::uint64_t seed) {
  Timer timer;
  const std::size_t trials = 100;
  std::size_t dts_fail = 0, dss_fail = 0;

  // Delay tolerant: dominating local compute energy must push every task out.
  Scenario dts = make_check_scenario(derive_key({seed, kTagCornerCheck, 1}), 8, 64);
  dts.tau_d = 0.1;
  std::fill(dts.q_w.begin(), dts.q_w.end(), 0.2);
  for (TaskSpec& t : dts.tasks) t.mu = 1.0;
  std::fill(dts.compute.p_cn_j_per_cycle.begin(), dts.compute.p_cn_j_per_cycle.end(), 1e-6);
  for (std::size_t t = 0; t < trials; ++t) {
    const SinrReport report = analyze(dts, sample_realization(dts, t));
    const CornerCaseVerdict v = corner_case_check(dts, report);
    bool all = true;
    for (int a : v.threshold_alpha) all = all && a == 1;
    if (!(v.claim_holds && all)) ++dts_fail;
  }

  // Delay sensitive: heterogeneous FAN speeds, everything else homogeneous;
  // the argmin rule must land on the slowest FAN.
  const std::vector<double> f_set = {2e8, 3e8, 4e8, 5e8, 6e8, 7e8, 8e8};
  Scenario dss = make_check_scenario(derive_key({seed, kTagCornerCheck, 2}),
                                     f_set.size(), 64);
  dss.tau_d = 0.1;
  std::fill(dss.q_w.begin(), dss.q_w.end(), 0.2);
  for (std::size_t k = 0; k < dss.K; ++k) {
    dss.tasks[k].mu = 0.0;
    dss.tasks[k].l_bits = 4e6;
    dss.tasks[k].cycles_per_bit = 1000.0;
    dss.compute.f_fan_hz[k] = f_set[k];
    dss.compute.f_cpu_hz[k] = 5e9;
    dss.compute.p_cn_j_per_cycle[k] = 1e-10;
    dss.w[k] = 1.0;
  }
  for (std::size_t t = 0; t < trials; ++t) {
    const SinrReport report = analyze(dss, sample_realization(dss, t));
    const CornerCaseVerdict v = corner_case_check(dss, report);
    if (!v.claim_holds) ++dss_fail;
  }

  CheckResult r;
  r.name = "allocation corner cases (delay tolerant / delay sensitive)";
  r.seconds = timer.seconds();
  r.pass = dts_fail == 0 && dss_fail == 0;
  r.detail = fmt("dts failures %g, dss failures %g", static_cast<double>(dts_fail),
                 static_cast<double>(dss_fail));
  return r;
}

CheckResult report_decision_stability(std::uint64_t seed) {
  Timer timer;
  const std::size_t trials = 100;
  Scenario s = make_check_scenario(derive_key({seed, 106}), 8, 16);
  s.tau_d = 0.1;
  std::fill(s.q_w.begin(), s.q_w.end(), 0.2);
  s.pathloss.exponent_hop2 = 0.0;

  std::string detail = "exact vs asymptotic decisions agree on all trials at";
  std::size_t stable_m = 0;
  for (const std::size_t m : {16, 32, 64, 128, 256}) {
    s.M = m;
    bool all_agree = true;
    for (std::size_t t = 0; t < trials && all_agree; ++t) {
      SinrReport report = analyze(s, sample_realization(s, t));
      const std::vector<int> exact = threshold_allocation(s, report);
      report.gamma_exact = report.gamma_asym;
      all_agree = exact == threshold_allocation(s, report);
    }
    if (all_agree && stable_m == 0) stable_m = m;
    detail += " M=" + std::to_string(m) + (all_agree ? ":yes" : ":no");
  }

  CheckResult r;
  r.name = "decision stability threshold (informational)";
  r.seconds = timer.seconds();
  r.pass = true;
  r.detail = stable_m > 0
                 ? detail + "; first stable M = " + std::to_string(stable_m)
                 : detail + "; no probed M was stable";
  return r;
}

std::vector<CheckResult> run_verification(std::uint64_t seed) {
  return {
      check_bandwidth_optimality(seed),
      check_task_allocation_optimality(seed),
      check_delta_identity(seed),
      check_asymptotic_convergence(seed),
      check_allocation_corners(seed),
      report_decision_stability(seed),
  };
}

}  // namespace cfmtc
