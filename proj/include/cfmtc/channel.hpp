#pragma once

#include <cstdint>
#include <vector>

#include "cfmtc/linalg.hpp"
#include "cfmtc/scenario.hpp"

namespace cfmtc {

// One seeded draw of the whole propagation environment: node placement,
// first-hop TN->FAN links and the M x K second-hop FAN->CAN matrix with its
// CSI-corrupted estimate.
struct ChannelRealization {
  std::vector<double> d;      // first-hop path gains, length K
  std::vector<cplx> h;        // first-hop small-scale fading, length K
  Matrix beta;                // second-hop large-scale gains, M x K
  CMatrix g_hat;              // estimated second-hop matrix, M x K
  CMatrix g;                  // actual second-hop matrix per the CSI model
  std::uint64_t trial_index = 0;
  std::uint32_t attempt = 0;
};

// Power gain at a given distance; 1 at and inside the reference distance.
// Throws std::domain_error for non-positive distances.
double path_loss(double distance_m, const PathLossLaw& law);

// Deterministic: identical (scenario, trial_index, attempt) give bit-identical
// output.  Draws are keyed per matrix entry, so realizations are nested when
// only K or M changes.
ChannelRealization sample_realization(const Scenario& scenario,
                                      std::uint64_t trial_index,
                                      std::uint32_t attempt = 0);

// p_b * d_k * |h_k|^2 / sigma2_first
double first_hop_snr(const Scenario& scenario, const ChannelRealization& real,
                     std::size_t k);
std::vector<double> first_hop_snrs(const Scenario& scenario,
                                   const ChannelRealization& real);

}  // namespace cfmtc
