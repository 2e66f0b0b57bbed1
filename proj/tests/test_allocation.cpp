#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "cfmtc/allocation.hpp"
#include "cfmtc/bandwidth.hpp"
#include "cfmtc/checks.hpp"
#include "cfmtc/errors.hpp"
#include "cfmtc/rng.hpp"

using namespace cfmtc;

namespace {

// Scenario + synthetic SINR report where every offload delta is controlled
// through the FAN speed: slow FANs force offloading, fast FANs forbid it.
struct Fixture {
  Scenario s;
  SinrReport sinr;

  Fixture(std::size_t k_count, double f_fan_hz, double gamma = 1.0) {
    s = make_check_scenario(derive_key({61, k_count}), k_count, 2 * k_count + 8);
    for (TaskSpec& t : s.tasks) {
      t.mu = 0.0;
      t.l_bits = 4e6;
      t.cycles_per_bit = 1000.0;
    }
    std::fill(s.compute.f_fan_hz.begin(), s.compute.f_fan_hz.end(), f_fan_hz);
    std::fill(s.compute.f_cpu_hz.begin(), s.compute.f_cpu_hz.end(), 5e9);
    sinr.gamma_exact.assign(k_count, gamma);
  }
};

}  // namespace

TEST_CASE("threshold corners") {
  // local compute nearly free: every delta > 0
  Fixture fast(6, 5e9, 100.0);
  CHECK(threshold_allocation(fast.s, fast.sinr) == std::vector<int>(6, 0));

  // local compute hopeless: every delta < 0
  Fixture slow(6, 1e7, 100.0);
  CHECK(threshold_allocation(slow.s, slow.sinr) == std::vector<int>(6, 1));
}

TEST_CASE("threshold equals exhaustive search") {
  for (std::uint64_t i = 0; i < 20; ++i) {
    const std::size_t K = 4 + static_cast<std::size_t>(i % 7);
    const Scenario s = make_check_scenario(derive_key({62, i}), K, 2 * K + 8);
    const ChannelRealization real = sample_realization(s, i);
    const SinrReport report = analyze(s, real);
    const BruteForceResult brute = brute_force_allocation(s, real);
    CHECK(threshold_allocation(s, report) == brute.alpha);
  }
}

TEST_CASE("K=10 threshold-vs-brute-force spot check") {
  const Scenario s = make_check_scenario(derive_key({63}), 10, 28);
  const ChannelRealization real = sample_realization(s, 0);
  const SinrReport report = analyze(s, real);
  CHECK(threshold_allocation(s, report) == brute_force_allocation(s, real).alpha);
}

TEST_CASE("dual allocation") {
  Fixture f(5, 1e8, 50.0);

  SUBCASE("zero initial dual terminates immediately") {
    const DualResult r = dual_allocation(f.s, f.sinr, 0.0);
    CHECK(r.converged);
    CHECK(r.iterations == 1);
    CHECK(r.alpha == threshold_allocation(f.s, f.sinr));
  }

  SUBCASE("positive initial dual converges to the threshold decisions") {
    const DualResult r = dual_allocation(f.s, f.sinr, 10.0);
    CHECK(r.converged);
    CHECK(r.alpha == threshold_allocation(f.s, f.sinr));
    CHECK(r.trace.size() == r.iterations);
    // psi is non-increasing along the trace
    for (std::size_t i = 1; i < r.trace.size(); ++i) {
      CHECK(r.trace[i].psi <= r.trace[i - 1].psi);
    }
  }

  SUBCASE("single task with negative delta offloads regardless of psi0") {
    Fixture one(1, 1e7, 100.0);
    CHECK(dual_allocation(one.s, one.sinr, 0.0).alpha == std::vector<int>{1});
    CHECK(dual_allocation(one.s, one.sinr, 25.0).alpha == std::vector<int>{1});
  }

  SUBCASE("bad arguments are rejected") {
    CHECK_THROWS_AS(dual_allocation(f.s, f.sinr, -1.0), std::invalid_argument);
  }
}

TEST_CASE("dual matches threshold on random scenarios") {
  for (std::uint64_t i = 0; i < 30; ++i) {
    const std::size_t K = 2 + static_cast<std::size_t>(i % 10);
    const Scenario s = make_check_scenario(derive_key({64, i}), K, 2 * K + 8);
    const SinrReport report = analyze(s, sample_realization(s, i));
    const DualResult r = dual_allocation(s, report, 5.0);
    CHECK(r.converged);
    CHECK(r.alpha == threshold_allocation(s, report));
  }
}

TEST_CASE("brute force basics") {
  SUBCASE("single task picks the cheaper branch") {
    const Scenario s = make_check_scenario(derive_key({65}), 1, 8);
    const ChannelRealization real = sample_realization(s, 0);
    const SinrReport report = analyze(s, real);
    const BruteForceResult r = brute_force_allocation(s, real);
    Allocation alloc;
    alloc.eta = optimal_bandwidth(s, real);
    alloc.alpha = {0};
    const double local = evaluate(s, real, report, alloc).omega_total;
    alloc.alpha = {1};
    const double remote = evaluate(s, real, report, alloc).omega_total;
    CHECK(r.omega_total == doctest::Approx(std::min(local, remote)));
    CHECK(r.alpha[0] == (remote < local ? 1 : 0));
  }

  SUBCASE("enumeration guard") {
    const Scenario s = make_check_scenario(derive_key({66}), 21, 24);
    const ChannelRealization real = sample_realization(s, 0);
    CHECK_THROWS_AS(brute_force_allocation(s, real), CapacityError);
  }

  SUBCASE("optimum dominates random draws") {
    const Scenario s = make_check_scenario(derive_key({67}), 12, 32);
    const ChannelRealization real = sample_realization(s, 0);
    const SinrReport report = analyze(s, real);
    const std::vector<double> eta = optimal_bandwidth(s, real);
    const FirstHopRates rates = fdma_rates(s, real, eta);
    const BruteForceResult best = brute_force_allocation(s, rates, report.gamma_exact);

    Rng rng(derive_key({68}));
    for (int i = 0; i < 10000; ++i) {
      std::vector<int> alpha(s.K);
      for (int& a : alpha) a = rng.coin() ? 1 : 0;
      const double omega =
          evaluate_with_rates(s, rates, report.gamma_exact, alpha).omega_total;
      CHECK(best.omega_total <= omega + 1e-12);
    }
  }
}

TEST_CASE("decisions are invariant to a common weight scale") {
  const Scenario s = make_check_scenario(derive_key({69}), 8, 24);
  const ChannelRealization real = sample_realization(s, 0);
  const SinrReport report = analyze(s, real);
  const std::vector<int> base = threshold_allocation(s, report);

  Scenario scaled = s;
  for (double& w : scaled.w) w *= 137.0;
  CHECK(threshold_allocation(scaled, report) == base);
  CHECK(brute_force_allocation(scaled, real).alpha ==
        brute_force_allocation(s, real).alpha);
}

TEST_CASE("argmin rule offloads exactly one task") {
  Fixture f(6, 1e8, 50.0);
  const std::vector<int> alpha = argmin_allocation(f.s, f.sinr);
  int count = 0;
  for (int a : alpha) count += a;
  CHECK(count == 1);
}

TEST_CASE("corner-case verdicts") {
  SUBCASE("delay tolerant with dominating local energy offloads everything") {
    Fixture f(5, 5e8, 20.0);
    for (TaskSpec& t : f.s.tasks) t.mu = 1.0;
    std::fill(f.s.compute.p_cn_j_per_cycle.begin(), f.s.compute.p_cn_j_per_cycle.end(),
              1e-6);
    const CornerCaseVerdict v = corner_case_check(f.s, f.sinr);
    CHECK(v.delay_tolerant);
    CHECK(v.claim_holds);
    CHECK(v.threshold_alpha == std::vector<int>(5, 1));
    CHECK(v.offload_cheaper == std::vector<int>(5, 1));
  }

  SUBCASE("delay sensitive argmin picks the slowest FAN") {
    Fixture f(3, 1e9, 10.0);
    f.s.compute.f_fan_hz = {2e8, 5e8, 8e8};
    const CornerCaseVerdict v = corner_case_check(f.s, f.sinr);
    CHECK_FALSE(v.delay_tolerant);
    CHECK(v.argmin_index == 0);
    CHECK(v.min_f_fan_index == 0);
    CHECK(v.claim_holds);
  }

  SUBCASE("free local compute keeps every task local") {
    Fixture f(4, 1e12, 10.0);
    f.s.compute.f_cpu_hz.assign(4, 1e12);
    f.s.compute.f_cpu_max_hz = 1e13;
    const CornerCaseVerdict v = corner_case_check(f.s, f.sinr);
    for (double op : v.operand) CHECK(op > 0.0);
    CHECK(v.threshold_alpha == std::vector<int>(4, 0));
  }

  SUBCASE("mixed weights are rejected") {
    Fixture f(3, 1e9, 10.0);
    f.s.tasks[1].mu = 1.0;
    CHECK_THROWS_AS(corner_case_check(f.s, f.sinr), std::invalid_argument);
    f.s.tasks[1].mu = 0.5;
    f.s.tasks[0].mu = 0.5;
    f.s.tasks[2].mu = 0.5;
    CHECK_THROWS_AS(corner_case_check(f.s, f.sinr), std::invalid_argument);
  }
}
