#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "cfmtc/checks.hpp"
#include "cfmtc/detection.hpp"
#include "cfmtc/errors.hpp"
#include "cfmtc/kernels.hpp"
#include "cfmtc/rng.hpp"
#include "cfmtc/stats.hpp"

using namespace cfmtc;

namespace {

CMatrix identity(std::size_t n) {
  CMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

// Columns of the M-point DFT matrix: orthogonal with squared norm M.
CMatrix dft_columns(std::size_t m_rows, std::size_t k_cols) {
  CMatrix g(m_rows, k_cols);
  for (std::size_t k = 0; k < k_cols; ++k) {
    for (std::size_t m = 0; m < m_rows; ++m) {
      const double phase = 2.0 * std::numbers::pi * static_cast<double>(m * k) /
                           static_cast<double>(m_rows);
      g(m, k) = {std::cos(phase), std::sin(phase)};
    }
  }
  return g;
}

CMatrix random_matrix(std::uint64_t key, std::size_t rows, std::size_t cols) {
  Rng rng(key);
  CMatrix g(rows, cols);
  for (cplx& z : g.data) z = rng.cnormal();
  return g;
}

double max_deviation_from_identity(const CMatrix& g_hat, const Detector& det) {
  double worst = 0.0;
  for (std::size_t k = 0; k < g_hat.cols; ++k) {
    for (std::size_t j = 0; j < g_hat.cols; ++j) {
      const cplx v = kernels::dotc(det.a_adj.col(k), g_hat.col(j), g_hat.rows);
      worst = std::max(worst, std::abs(v - (k == j ? cplx{1.0, 0.0} : cplx{0.0, 0.0})));
    }
  }
  return worst;
}

// Brute-force SINR of the receiver chain: random symbols through the actual
// channel (fresh CSI error per use), ZF combining, measured powers.
double mc_sinr(const CMatrix& g_hat, const Detector& det, const Scenario& s,
               std::size_t k, std::size_t n_symbols, std::uint64_t key) {
  const std::size_t m_rows = g_hat.rows, k_cols = g_hat.cols;
  Rng rng(key);
  const double mix = std::sqrt(1.0 - s.tau_d * s.tau_d);
  std::vector<cplx> y(m_rows), omega_col(m_rows), sym(k_cols);
  double signal_power = 0.0, rest_power = 0.0;
  const double noise_scale = std::sqrt(s.sigma2);
  for (std::size_t it = 0; it < n_symbols; ++it) {
    for (cplx& z : sym) z = rng.cnormal();
    for (cplx& z : y) z = noise_scale * rng.cnormal();
    for (std::size_t j = 0; j < k_cols; ++j) {
      const double amp = std::sqrt(s.rho * s.q_w[j]);
      kernels::axpy(amp * mix * sym[j], g_hat.col(j), y.data(), m_rows);
      if (s.tau_d > 0.0) {
        for (cplx& z : omega_col) z = rng.cnormal();
        kernels::axpy(amp * s.tau_d * sym[j], omega_col.data(), y.data(), m_rows);
      }
    }
    const cplx out = kernels::dotc(det.a_adj.col(k), y.data(), m_rows);
    const cplx signal = std::sqrt(s.rho * s.q_w[k]) * mix * sym[k];
    signal_power += std::norm(signal);
    rest_power += std::norm(out - signal);
  }
  return signal_power / rest_power;
}

Scenario detection_scenario(std::size_t k_count, std::size_t m_count, double tau,
                            double q = 0.2) {
  Scenario s = make_check_scenario(derive_key({909}), k_count, m_count);
  s.tau_d = tau;
  s.rho = 1.0;
  s.sigma2 = 1.0;
  std::fill(s.q_w.begin(), s.q_w.end(), q);
  s.pathloss.exponent_hop2 = 0.0;
  return s;
}

}  // namespace

TEST_CASE("zero forcing on the identity channel") {
  const Detector det = zf_detector(identity(4));
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      CHECK(std::abs(det.a(i, j) - (i == j ? cplx{1, 0} : cplx{0, 0})) < 1e-12);
    }
  }
  CHECK(det.condition_number == doctest::Approx(1.0));
}

TEST_CASE("orthogonal columns invert to the scaled adjoint") {
  const std::size_t m = 16, k = 4;
  const CMatrix g = dft_columns(m, k);
  const Detector det = zf_detector(g);
  for (std::size_t row = 0; row < k; ++row) {
    for (std::size_t col = 0; col < m; ++col) {
      const cplx want = std::conj(g(col, row)) / static_cast<double>(m);
      CHECK(std::abs(det.a(row, col) - want) < 1e-12);
    }
  }
}

TEST_CASE("detector inverts any well-conditioned draw") {
  const CMatrix g = random_matrix(derive_key({21}), 32, 6);
  const Detector det = zf_detector(g);
  CHECK(max_deviation_from_identity(g, det) < 1e-10);
}

TEST_CASE("rank-deficient estimates are rejected with the condition number") {
  CMatrix g = random_matrix(derive_key({22}), 16, 3);
  for (std::size_t m = 0; m < g.rows; ++m) g(m, 2) = g(m, 1);  // duplicate column
  try {
    zf_detector(g);
    FAIL("expected SingularMatrixError");
  } catch (const SingularMatrixError& e) {
    CHECK(e.condition_number > 1e8);
  }
  CHECK_THROWS_AS(zf_detector(random_matrix(derive_key({23}), 3, 5)),
                  SingularMatrixError);
}

TEST_CASE("exact SINR closed form on orthogonal columns") {
  const std::size_t m = 64, k = 4;
  Scenario s = detection_scenario(k, m, 0.0);
  const CMatrix g = dft_columns(m, k);
  const Detector det = zf_detector(g);
  const std::vector<double> gamma = exact_sinr(g, det, s);
  for (std::size_t i = 0; i < k; ++i) {
    CHECK(gamma[i] ==
          doctest::Approx(s.rho * s.q_w[i] * static_cast<double>(m) / s.sigma2));
  }

  // doubling one transmit power doubles that SINR under perfect CSI
  Scenario s2 = s;
  s2.q_w[1] *= 2.0;
  const std::vector<double> gamma2 = exact_sinr(g, det, s2);
  CHECK(gamma2[1] == doctest::Approx(2.0 * gamma[1]));
}

TEST_CASE("no CSI means zero SINR") {
  Scenario s = detection_scenario(4, 32, 1.0);
  const CMatrix g = random_matrix(derive_key({24}), 32, 4);
  const std::vector<double> gamma = exact_sinr(g, zf_detector(g), s);
  for (double v : gamma) CHECK(v == 0.0);
}

TEST_CASE("exact SINR is strictly decreasing in the CSI error") {
  const CMatrix g = random_matrix(derive_key({25}), 32, 4);
  const Detector det = zf_detector(g);
  double prev = std::numeric_limits<double>::infinity();
  for (double tau : {0.0, 0.2, 0.5, 0.9}) {
    Scenario s = detection_scenario(4, 32, tau);
    const double gamma = exact_sinr(g, det, s)[0];
    CHECK(gamma < prev);
    prev = gamma;
  }
}

TEST_CASE("scaling the estimate rescales SINR quadratically") {
  const CMatrix g = random_matrix(derive_key({26}), 24, 4);
  CMatrix scaled = g;
  const double c = 3.5;
  for (cplx& z : scaled.data) z *= c;
  Scenario s = detection_scenario(4, 24, 0.3);
  const Detector dg = zf_detector(g);
  const Detector ds = zf_detector(scaled);
  CHECK(max_deviation_from_identity(scaled, ds) < 1e-10);
  const std::vector<double> base = exact_sinr(g, dg, s);
  const std::vector<double> got = exact_sinr(scaled, ds, s);
  for (std::size_t k = 0; k < 4; ++k) {
    CHECK(got[k] == doctest::Approx(c * c * base[k]).epsilon(1e-9));
  }
}

TEST_CASE("monte carlo receiver chain confirms the closed form") {
  const std::size_t m = 32, k = 4;
  Scenario s = detection_scenario(k, m, 0.2);

  SUBCASE("perfect CSI, orthogonal columns") {
    s.tau_d = 0.0;
    const CMatrix g = dft_columns(m, k);
    const Detector det = zf_detector(g);
    const double exact = exact_sinr(g, det, s)[1];
    const double mc = mc_sinr(g, det, s, 1, 1000000, derive_key({27}));
    CHECK(mc == doctest::Approx(exact).epsilon(0.02));
  }

  SUBCASE("imperfect CSI, generic draw") {
    const CMatrix g = random_matrix(derive_key({28}), m, k);
    const Detector det = zf_detector(g);
    const std::vector<double> exact = exact_sinr(g, det, s);
    for (std::size_t idx : {std::size_t{0}, std::size_t{3}}) {
      const double mc = mc_sinr(g, det, s, idx, 1000000, derive_key({29, idx}));
      CHECK(mc == doctest::Approx(exact[idx]).epsilon(0.02));
    }
  }
}

TEST_CASE("asymptotic SINR closed form") {
  Scenario s = detection_scenario(4, 128, 0.1);
  Matrix beta(128, 4);
  std::fill(beta.data.begin(), beta.data.end(), 1.0);
  const std::vector<double> gamma = asymptotic_sinr(s, beta);
  const double tau2 = s.tau_d * s.tau_d;
  for (std::size_t k = 0; k < 4; ++k) {
    CHECK(gamma[k] ==
          doctest::Approx(s.q_w[k] * s.rho * (1.0 - tau2) * 128.0 / s.sigma2));
  }

  // linear in M
  Scenario s2 = s;
  s2.M = 256;
  Matrix beta2(256, 4);
  std::fill(beta2.data.begin(), beta2.data.end(), 1.0);
  const std::vector<double> gamma2 = asymptotic_sinr(s2, beta2);
  for (std::size_t k = 0; k < 4; ++k) {
    CHECK(gamma2[k] == doctest::Approx(2.0 * gamma[k]));
  }
}

TEST_CASE("literal eigenvalue form of the limit") {
  Scenario s = detection_scenario(4, 64, 0.1);
  const std::vector<double> eigs(4, 64.0);  // orthogonal columns of norm M
  const std::vector<double> gamma = asymptotic_sinr_from_eigenvalues(s, eigs);
  const double tau2 = s.tau_d * s.tau_d;
  const double denom = s.sigma2 / 64.0 * (4.0 / 64.0);
  for (std::size_t k = 0; k < 4; ++k) {
    CHECK(gamma[k] == doctest::Approx(s.q_w[k] * s.rho * (1.0 - tau2) / denom));
  }
}

TEST_CASE("gram eigenvalues") {
  const std::vector<double> unit = gram_eigenvalues(identity(5));
  for (double v : unit) CHECK(v == doctest::Approx(1.0));

  const std::vector<double> dft = gram_eigenvalues(dft_columns(16, 4));
  for (double v : dft) CHECK(v == doctest::Approx(16.0));

  const CMatrix g = random_matrix(derive_key({30}), 64, 4);
  const std::vector<double> eigs = gram_eigenvalues(g);
  double sum = 0.0;
  for (std::size_t i = 0; i < eigs.size(); ++i) {
    CHECK(eigs[i] >= 0.0);
    if (i) CHECK(eigs[i] <= eigs[i - 1]);
    sum += eigs[i];
  }
  CHECK(sum == doctest::Approx(frobenius_sq(g)).epsilon(1e-8));
}

TEST_CASE("relative gap shrinks as the array grows") {
  const std::size_t trials = 1000;
  std::vector<double> medians;
  for (const std::size_t m : {32, 64, 128, 256}) {
    Scenario s = detection_scenario(4, m, 0.1);
    std::vector<double> gaps(trials);
    for (std::size_t t = 0; t < trials; ++t) {
      const SinrReport report = analyze(s, sample_realization(s, t));
      gaps[t] = stats::median(report.relative_gap);
    }
    medians.push_back(stats::median(gaps));
  }
  for (std::size_t i = 1; i < medians.size(); ++i) CHECK(medians[i] <= medians[i - 1]);
  CHECK(medians.back() < 0.1);
}
