#include "cfmtc/bandwidth.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "cfmtc/errors.hpp"

namespace cfmtc {

namespace {

// Spread of the would-be multipliers c_k / eta_k^2; zero exactly at the KKT point.
double multiplier_spread(const std::vector<double>& c, const std::vector<double>& eta) {
  double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
  for (std::size_t k = 0; k < c.size(); ++k) {
    const double xi = c[k] / (eta[k] * eta[k]);
    lo = std::min(lo, xi);
    hi = std::max(hi, xi);
  }
  return hi > 0.0 ? (hi - lo) / hi : 0.0;
}

}  // namespace

std::vector<double> bandwidth_coefficients(const Scenario& s,
                                           const ChannelRealization& real) {
  std::vector<double> c(s.K);
  for (std::size_t k = 0; k < s.K; ++k) {
    const double snr = first_hop_snr(s, real, k);
    if (!(snr > 0.0)) {
      throw InfeasibleError("bandwidth: task " + std::to_string(k) +
                            " has zero first-hop SNR and can never transmit");
    }
    const double mu = s.tasks[k].mu;
    c[k] = s.w[k] * ((1.0 - mu) + mu * s.p_b_w) * s.tasks[k].l_bits /
           (s.B_hz * std::log2(1.0 + snr));
  }
  return c;
}

double bandwidth_objective(const std::vector<double>& c, const std::vector<double>& eta) {
  double sum = 0.0;
  for (std::size_t k = 0; k < c.size(); ++k) sum += c[k] / eta[k];
  return sum;
}

std::vector<double> optimal_bandwidth_from_coefficients(const std::vector<double>& c) {
  const std::size_t n = c.size();
  std::vector<double> eta(n);
  double norm = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    eta[k] = std::sqrt(c[k]);
    norm += eta[k];
  }
  if (norm == 0.0) {
    // Any feasible point is optimal; pick the symmetric one.
    std::fill(eta.begin(), eta.end(), 1.0 / static_cast<double>(n));
    return eta;
  }
  for (double& e : eta) e /= norm;
  return eta;
}

std::vector<double> optimal_bandwidth(const Scenario& s, const ChannelRealization& real) {
  return optimal_bandwidth_from_coefficients(bandwidth_coefficients(s, real));
}

std::vector<double> bandwidth_oracle_from_coefficients(const std::vector<double>& c,
                                                       double tolerance,
                                                       std::size_t max_iters) {
  const std::size_t n = c.size();
  std::vector<double> eta(n, 1.0 / static_cast<double>(n));
  if (std::accumulate(c.begin(), c.end(), 0.0) == 0.0) return eta;
  for (double v : c) {
    if (!(v > 0.0)) {
      throw std::invalid_argument("bandwidth_oracle: coefficients must be positive");
    }
  }

  // Feasible-direction descent with the diagonal-Hessian preconditioner: the
  // search direction solves min 0.5 d^T H d + g^T d over sum(d) = 0, so every
  // iterate stays on the simplex and positivity is kept by capping the step.
  double fval = bandwidth_objective(c, eta);
  std::vector<double> grad(n), dir(n), trial(n);
  for (std::size_t it = 0; it < max_iters; ++it) {
    const double spread = multiplier_spread(c, eta);
    if (spread < 1e-10) return eta;

    double nu_num = 0.0, nu_den = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      grad[k] = -c[k] / (eta[k] * eta[k]);
      const double h = 2.0 * c[k] / (eta[k] * eta[k] * eta[k]);
      nu_num += grad[k] / h;
      nu_den += 1.0 / h;
    }
    const double nu = -nu_num / nu_den;
    double slope = 0.0, max_shrink = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      const double h = 2.0 * c[k] / (eta[k] * eta[k] * eta[k]);
      dir[k] = -(grad[k] + nu) / h;
      slope += grad[k] * dir[k];
      if (dir[k] < 0.0) max_shrink = std::max(max_shrink, -dir[k] / eta[k]);
    }

    double t = max_shrink > 0.0 ? std::min(1.0, 0.5 / max_shrink) : 1.0;
    bool improved = false;
    for (int bt = 0; bt < 60 && !improved; ++bt, t *= 0.5) {
      for (std::size_t k = 0; k < n; ++k) trial[k] = eta[k] + t * dir[k];
      const double ftrial = bandwidth_objective(c, trial);
      if (ftrial <= fval + 1e-4 * t * slope ||
          (ftrial <= fval && std::abs(fval - ftrial) <=
                                 tolerance * std::max(1.0, std::abs(fval)))) {
        eta.swap(trial);
        fval = ftrial;
        improved = true;
      }
    }
    if (!improved) {
      // Objective differences are below double resolution; the multiplier
      // spread tells whether we are close enough to call it converged.
      if (spread < 1e-8) return eta;
      throw SolverError("bandwidth_oracle: stalled before reaching the KKT point",
                        spread);
    }
  }
  throw SolverError("bandwidth_oracle: no convergence within iteration cap",
                    multiplier_spread(c, eta));
}

std::vector<double> bandwidth_oracle(const Scenario& s, const ChannelRealization& real,
                                     double tolerance, std::size_t max_iters) {
  return bandwidth_oracle_from_coefficients(bandwidth_coefficients(s, real), tolerance,
                                            max_iters);
}

}  // namespace cfmtc
