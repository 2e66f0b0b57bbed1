#pragma once

#include <cstddef>
#include <vector>

#include "cfmtc/channel.hpp"
#include "cfmtc/scenario.hpp"

namespace cfmtc {

// Coefficient of 1/eta_k in the total cost:
//   c_k = w_k * ((1 - mu_k) + mu_k * p_b) * l_k / (B log2(1 + snr_k)).
// Throws InfeasibleError when any first-hop SNR is zero.
std::vector<double> bandwidth_coefficients(const Scenario& scenario,
                                           const ChannelRealization& real);

// sum_k c_k / eta_k
double bandwidth_objective(const std::vector<double>& c, const std::vector<double>& eta);

// Closed-form minimizer on the simplex: eta_k = sqrt(c_k) / sum_j sqrt(c_j).
// The common multiplier this implies is (sum_j sqrt(c_j))^2.  Degenerate
// all-zero coefficients fall back to the uniform split.
std::vector<double> optimal_bandwidth(const Scenario& scenario,
                                      const ChannelRealization& real);
std::vector<double> optimal_bandwidth_from_coefficients(const std::vector<double>& c);

// Independent numerical check: descent over the simplex along preconditioned
// feasible directions with a backtracking line search, stopped when the KKT
// multiplier spread vanishes.  Throws SolverError with the residual when the
// iteration cap is hit before convergence.
std::vector<double> bandwidth_oracle(const Scenario& scenario,
                                     const ChannelRealization& real,
                                     double tolerance = 1e-13,
                                     std::size_t max_iters = 200000);
std::vector<double> bandwidth_oracle_from_coefficients(const std::vector<double>& c,
                                                       double tolerance = 1e-13,
                                                       std::size_t max_iters = 200000);

}  // namespace cfmtc
