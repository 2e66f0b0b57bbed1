#pragma once

#include <vector>

#include "cfmtc/channel.hpp"
#include "cfmtc/linalg.hpp"
#include "cfmtc/scenario.hpp"

namespace cfmtc {

// Global zero-forcing receiver over the stacked M x K estimated channel,
// applied at the CPU after CAN aggregation.
struct Detector {
  CMatrix a;       // K x M, row k is the combining vector a_k
  CMatrix a_adj;   // M x K adjoint of a; column k is conj(a_k), contiguous
  double condition_number = 0.0;
};

struct SinrReport {
  std::vector<double> gamma_exact;       // finite-M ZF SINR per task
  std::vector<double> gamma_asym;        // large-M limit per task
  std::vector<double> gram_eigenvalues;  // eigenvalues of g_hat^H g_hat, descending
  std::vector<double> relative_gap;      // |exact - asym| / asym
  double condition_number = 0.0;
};

// Large-M SINR limit.  The default closed form uses the per-task mean of the
// large-scale gains; the alternative divides by the summed inverse Gram
// eigenvalues instead.  The two scale differently (a factor of order M/K),
// so both stay available for side-by-side reporting.
enum class AsymptoticForm { beta_mean, eigenvalue_literal };

// Throws SingularMatrixError (carrying the condition number) when g_hat is
// rank deficient or its condition number exceeds the threshold.
Detector zf_detector(const CMatrix& g_hat, double cond_threshold = 1e8);

// gamma_k = rho q_k (1 - tau^2) / ((rho tau^2 sum_j q_j + sigma2) * ||a_k||^2)
std::vector<double> exact_sinr(const CMatrix& g_hat, const Detector& detector,
                               const Scenario& scenario);

// beta_mean: q_k rho (1 - tau^2) M mean_m(beta_mk) / sigma2
std::vector<double> asymptotic_sinr(const Scenario& scenario, const Matrix& beta,
                                    AsymptoticForm form = AsymptoticForm::beta_mean);

// eigenvalue_literal: q_k rho (1 - tau^2) / ((sigma2 / M) sum_k 1/lambda_k)
std::vector<double> asymptotic_sinr_from_eigenvalues(
    const Scenario& scenario, const std::vector<double>& gram_eigenvalues);

std::vector<double> gram_eigenvalues(const CMatrix& g_hat);

// Full detection pass over one realization.
SinrReport analyze(const Scenario& scenario, const ChannelRealization& real);

}  // namespace cfmtc
