#include "cfmtc/detection.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <limits>

#include "cfmtc/errors.hpp"
#include "cfmtc/kernels.hpp"

namespace cfmtc {

namespace {

Eigen::Map<const Eigen::MatrixXcd> view(const CMatrix& m) {
  return {m.data.data(), static_cast<Eigen::Index>(m.rows),
          static_cast<Eigen::Index>(m.cols)};
}

}  // namespace

Detector zf_detector(const CMatrix& g_hat, double cond_threshold) {
  const std::size_t m = g_hat.rows, k = g_hat.cols;
  if (m < k) {
    throw SingularMatrixError("zf_detector: need M >= K",
                              std::numeric_limits<double>::infinity());
  }

  const CMatrix c = gram(g_hat);
  const std::vector<double> eigs = hermitian_eigenvalues_desc(c);
  const double lambda_max = eigs.front();
  const double lambda_min = eigs.back();
  const double cond = lambda_min > 0.0
                          ? std::sqrt(lambda_max / lambda_min)
                          : std::numeric_limits<double>::infinity();
  if (!(cond < cond_threshold)) {
    throw SingularMatrixError("zf_detector: estimated channel is ill-conditioned",
                              cond);
  }

  // A = (g^H g)^-1 g^H, so A^H = g (g^H g)^-1; the adjoint layout keeps each
  // combining vector contiguous for the kernels.
  Eigen::MatrixXcd cinv =
      view(c).llt().solve(Eigen::MatrixXcd::Identity(static_cast<Eigen::Index>(k),
                                                     static_cast<Eigen::Index>(k)));
  Eigen::MatrixXcd a_adj = view(g_hat) * cinv;

  Detector det;
  det.condition_number = cond;
  det.a_adj = CMatrix(m, k);
  Eigen::Map<Eigen::MatrixXcd>(det.a_adj.data.data(), static_cast<Eigen::Index>(m),
                               static_cast<Eigen::Index>(k)) = a_adj;
  det.a = adjoint(det.a_adj);
  return det;
}

std::vector<double> exact_sinr(const CMatrix& g_hat, const Detector& detector,
                               const Scenario& s) {
  (void)g_hat;
  const std::size_t K = detector.a_adj.cols;
  const std::size_t M = detector.a_adj.rows;
  const double tau2 = s.tau_d * s.tau_d;
  const double denom_power = s.rho * tau2 * total_q(s) + s.sigma2;
  std::vector<double> out(K);
  for (std::size_t k = 0; k < K; ++k) {
    const double norm2 = kernels::sum_abs2(detector.a_adj.col(k), M);
    out[k] = s.rho * s.q_w[k] * (1.0 - tau2) / (denom_power * norm2);
  }
  return out;
}

std::vector<double> asymptotic_sinr(const Scenario& s, const Matrix& beta,
                                    AsymptoticForm form) {
  const std::size_t K = beta.cols, M = beta.rows;
  const double tau2 = s.tau_d * s.tau_d;
  std::vector<double> out(K);
  if (form == AsymptoticForm::beta_mean) {
    for (std::size_t k = 0; k < K; ++k) {
      double mean_beta = 0.0;
      for (std::size_t m = 0; m < M; ++m) mean_beta += beta(m, k);
      mean_beta /= static_cast<double>(M);
      out[k] = s.q_w[k] * s.rho * (1.0 - tau2) * static_cast<double>(M) * mean_beta /
               s.sigma2;
    }
    return out;
  }
  // The eigenvalue form wants the realized Gram spectrum; callers that only
  // have beta get the deterministic stand-in lambda_k ~ sum_m beta_mk.
  std::vector<double> eigs(K);
  for (std::size_t k = 0; k < K; ++k) {
    double sum = 0.0;
    for (std::size_t m = 0; m < M; ++m) sum += beta(m, k);
    eigs[k] = sum;
  }
  return asymptotic_sinr_from_eigenvalues(s, eigs);
}

std::vector<double> asymptotic_sinr_from_eigenvalues(
    const Scenario& s, const std::vector<double>& gram_eigenvalues) {
  const double tau2 = s.tau_d * s.tau_d;
  double inv_sum = 0.0;
  for (double lambda : gram_eigenvalues) {
    inv_sum += lambda > 0.0 ? 1.0 / lambda : std::numeric_limits<double>::infinity();
  }
  const double denom = s.sigma2 / static_cast<double>(s.M) * inv_sum;
  std::vector<double> out(gram_eigenvalues.size());
  for (std::size_t k = 0; k < out.size(); ++k) {
    out[k] = s.q_w[k] * s.rho * (1.0 - tau2) / denom;
  }
  return out;
}

std::vector<double> gram_eigenvalues(const CMatrix& g_hat) {
  return hermitian_eigenvalues_desc(gram(g_hat));
}

SinrReport analyze(const Scenario& s, const ChannelRealization& real) {
  const std::size_t K = s.K;
  SinrReport report;

  // One Gram pass feeds the eigenvalue report, the conditioning guard and the
  // ZF noise amplification ||a_k||^2 = [(g^H g)^-1]_kk.
  const CMatrix c = gram(real.g_hat);
  report.gram_eigenvalues = hermitian_eigenvalues_desc(c);
  const double lambda_min = report.gram_eigenvalues.back();
  report.condition_number =
      lambda_min > 0.0
          ? std::sqrt(report.gram_eigenvalues.front() / lambda_min)
          : std::numeric_limits<double>::infinity();
  if (!(report.condition_number < s.cond_threshold)) {
    throw SingularMatrixError("analyze: estimated channel is ill-conditioned",
                              report.condition_number);
  }

  Eigen::MatrixXcd cinv =
      view(c).llt().solve(Eigen::MatrixXcd::Identity(static_cast<Eigen::Index>(K),
                                                     static_cast<Eigen::Index>(K)));
  const double tau2 = s.tau_d * s.tau_d;
  const double denom_power = s.rho * tau2 * total_q(s) + s.sigma2;
  report.gamma_exact.resize(K);
  for (std::size_t k = 0; k < K; ++k) {
    const double norm2 = cinv(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(k)).real();
    report.gamma_exact[k] = s.rho * s.q_w[k] * (1.0 - tau2) / (denom_power * norm2);
  }

  report.gamma_asym = asymptotic_sinr(s, real.beta);
  report.relative_gap.resize(K);
  for (std::size_t k = 0; k < K; ++k) {
    report.relative_gap[k] =
        std::abs(report.gamma_exact[k] - report.gamma_asym[k]) / report.gamma_asym[k];
  }
  return report;
}

}  // namespace cfmtc
