#include "cfmtc/channel.hpp"

#include <cmath>
#include <stdexcept>

#include "cfmtc/errors.hpp"
#include "cfmtc/rng.hpp"

namespace cfmtc {

namespace {

struct Point {
  double x, y;
};

Point uniform_point(Rng& rng, double extent) {
  return {rng.uniform01() * extent, rng.uniform01() * extent};
}

double distance(Point a, Point b) {
  const double dx = a.x - b.x, dy = a.y - b.y;
  // Coincident draws have measure zero; keep path_loss's domain anyway.
  return std::max(std::hypot(dx, dy), 1e-12);
}

}  // namespace

double path_loss(double distance_m, const PathLossLaw& law) {
  if (!(distance_m > 0.0)) {
    throw std::domain_error("path_loss: distance must be > 0");
  }
  if (distance_m <= law.reference_m) return 1.0;
  return std::pow(law.reference_m / distance_m, law.exponent);
}

ChannelRealization sample_realization(const Scenario& s, std::uint64_t trial,
                                      std::uint32_t attempt) {
  validate(s);

  const std::size_t K = s.K, M = s.M;
  ChannelRealization real;
  real.trial_index = trial;
  real.attempt = attempt;
  real.d.resize(K);
  real.h.resize(K);
  real.beta = Matrix(M, K);
  real.g_hat = CMatrix(M, K);
  real.g = CMatrix(M, K);

  const std::uint64_t at = attempt;
  const PathLossLaw hop1 = s.pathloss.first_hop();
  const PathLossLaw hop2 = s.pathloss.second_hop();

  std::vector<Point> tn(K), fan(K), can(M);
  for (std::size_t k = 0; k < K; ++k) {
    Rng rt(derive_key({s.seed, kTagPlacementTn, trial, at, k}));
    Rng rf(derive_key({s.seed, kTagPlacementFan, trial, at, k}));
    tn[k] = uniform_point(rt, s.pathloss.extent_m);
    fan[k] = uniform_point(rf, s.pathloss.extent_m);
  }
  for (std::size_t m = 0; m < M; ++m) {
    Rng rc(derive_key({s.seed, kTagPlacementCan, trial, at, m}));
    can[m] = uniform_point(rc, s.pathloss.extent_m);
  }

  for (std::size_t k = 0; k < K; ++k) {
    real.d[k] = path_loss(distance(tn[k], fan[k]), hop1);
    Rng rh(derive_key({s.seed, kTagFirstHopFading, trial, at, k}));
    real.h[k] = rh.cnormal();
  }

  // g_hat carries the large-scale gain; the actual channel mixes in a
  // unit-variance estimation error: g = sqrt(1 - tau^2) g_hat + tau * omega.
  const double mix = std::sqrt(1.0 - s.tau_d * s.tau_d);
  for (std::size_t k = 0; k < K; ++k) {
    for (std::size_t m = 0; m < M; ++m) {
      const double b = path_loss(distance(fan[k], can[m]), hop2);
      real.beta(m, k) = b;
      Rng re(derive_key({s.seed, kTagSecondHopEstimate, trial, at, m, k}));
      Rng rw(derive_key({s.seed, kTagCsiError, trial, at, m, k}));
      const cplx ghat = std::sqrt(b) * re.cnormal();
      real.g_hat(m, k) = ghat;
      real.g(m, k) = mix * ghat + s.tau_d * rw.cnormal();
    }
  }
  return real;
}

double first_hop_snr(const Scenario& s, const ChannelRealization& real,
                     std::size_t k) {
  const double h2 = std::norm(real.h[k]);
  return s.p_b_w * real.d[k] * h2 / s.sigma2_first_w;
}

std::vector<double> first_hop_snrs(const Scenario& s, const ChannelRealization& real) {
  std::vector<double> out(s.K);
  for (std::size_t k = 0; k < s.K; ++k) out[k] = first_hop_snr(s, real, k);
  return out;
}

}  // namespace cfmtc
