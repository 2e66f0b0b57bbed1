#pragma once

#include <cstddef>
#include <vector>

#include "cfmtc/cost.hpp"
#include "cfmtc/detection.hpp"
#include "cfmtc/scenario.hpp"

namespace cfmtc {

// alpha_k = 1 iff offload_delta_k < 0; ties stay local.  Optimal for the
// total cost at any fixed bandwidth split because the objective is separable
// and affine in each alpha_k.
std::vector<int> threshold_allocation(const Scenario& scenario, const SinrReport& sinr);

// Single-offloader rule: one-hot at argmin_k (offload_delta_k + psi).  Used
// by the delay-sensitive corner-case check; the threshold rule is the
// default policy.
std::vector<int> argmin_allocation(const Scenario& scenario, const SinrReport& sinr,
                                   double psi = 0.0);

struct DualTracePoint {
  double psi = 0.0;
  int offload_count = 0;
};

struct DualResult {
  std::vector<int> alpha;
  std::vector<DualTracePoint> trace;
  bool converged = false;
  std::size_t iterations = 0;
};

// Partial dual of the offload-count constraint: for fixed psi pick
// alpha_k = 1 iff delta_k + psi < 0, then update psi by the projected
// subgradient psi <- max(0, psi + step * (sum alpha - K)) with diminishing
// steps step_scale / t.  The constraint is never violated, so psi falls to 0
// and the decisions match threshold_allocation.
DualResult dual_allocation(const Scenario& scenario, const SinrReport& sinr,
                           double psi0 = 0.0, double step_scale = 1.0,
                           std::size_t max_iters = 10000);

struct BruteForceResult {
  std::vector<int> alpha;
  double omega_total = 0.0;
};

// Exhaustive minimum over {0,1}^K with the optimal bandwidth split (which is
// alpha-independent).  Ties break toward the lexicographically smallest
// alpha.  Throws CapacityError for K > 20.
BruteForceResult brute_force_allocation(const Scenario& scenario,
                                        const ChannelRealization& real);
// Same search against explicitly given first-hop rates (for pairing with a
// non-FDMA bandwidth policy).
BruteForceResult brute_force_allocation(const Scenario& scenario,
                                        const FirstHopRates& rates,
                                        const std::vector<double>& gamma);

struct CornerCaseVerdict {
  bool delay_tolerant = false;        // true: mu == 1 mode, false: mu == 0 mode
  std::vector<double> operand;        // per-task argmin operand (delta at the corner)
  std::vector<int> threshold_alpha;
  // mu == 1: per task, whether remote transmission beats local compute energy.
  std::vector<int> offload_cheaper;
  // mu == 0: selected offloader under the argmin rule vs the slowest FAN.
  int argmin_index = -1;
  int min_f_fan_index = -1;
  bool claim_holds = false;
};

// Requires mu_k identical for all k and equal to 0 or 1; throws
// std::invalid_argument otherwise.
CornerCaseVerdict corner_case_check(const Scenario& scenario, const SinrReport& sinr);

}  // namespace cfmtc
