#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cfmtc/scenario.hpp"

namespace cfmtc {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

// Randomized but fully seeded scenario for oracle suites: channel and power
// scales chosen so rates, SINRs and costs land in sane ranges.
Scenario make_check_scenario(std::uint64_t key, std::size_t K, std::size_t M);

// Closed-form bandwidth split vs projected-gradient oracle, 100 scenarios
// with K in 2..16; max per-coordinate gap must stay below 1e-6.
CheckResult check_bandwidth_optimality(std::uint64_t seed);

// Threshold and dual decisions vs exhaustive enumeration, 200 scenarios with
// K in 4..12; zero mismatches allowed.
CheckResult check_task_allocation_optimality(std::uint64_t seed);

// offload_delta vs the cost difference of flipping one task, to 1e-10
// relative of the quantities involved.
CheckResult check_delta_identity(std::uint64_t seed);

// Median relative gap between exact and asymptotic SINR over M in
// {32,64,128,256} at K=8, tau=0.1, beta==1: non-increasing, and < 10% at 256.
CheckResult check_asymptotic_convergence(std::uint64_t seed);

// Allocation corner cases: mu==1 with dominating local compute energy must
// offload everything; mu==0 with heterogeneous FAN speeds must pick the
// slowest FAN under the argmin rule.  100% of seeded trials.
CheckResult check_allocation_corners(std::uint64_t seed);

// Informational (always passes): per-scenario report of the smallest M at
// which offloading decisions computed from the exact and from the asymptotic
// SINR agree on every probed trial.  The decision stabilizes long before the
// SINR values themselves converge.
CheckResult report_decision_stability(std::uint64_t seed);

std::vector<CheckResult> run_verification(std::uint64_t seed);

}  // namespace cfmtc
