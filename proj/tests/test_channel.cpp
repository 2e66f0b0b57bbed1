#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "cfmtc/channel.hpp"
#include "cfmtc/checks.hpp"
#include "cfmtc/errors.hpp"
#include "cfmtc/rng.hpp"

using namespace cfmtc;

TEST_CASE("path loss law") {
  const PathLossLaw inverse_square{10.0, 2.0};
  CHECK(path_loss(10.0, inverse_square) == 1.0);
  CHECK(path_loss(20.0, inverse_square) == doctest::Approx(0.25));
  CHECK(path_loss(100.0, {10.0, 3.5}) == doctest::Approx(std::pow(10.0, -3.5)));
  CHECK(path_loss(5.0, inverse_square) == 1.0);  // clamped inside the reference
  CHECK_THROWS_AS(path_loss(0.0, inverse_square), std::domain_error);
  CHECK_THROWS_AS(path_loss(-1.0, inverse_square), std::domain_error);

  double prev = path_loss(1e-3, inverse_square);
  for (double d = 1.0; d < 1e4; d *= 1.7) {
    const double g = path_loss(d, inverse_square);
    CHECK(g <= prev);
    prev = g;
  }
}

TEST_CASE("perfect CSI makes the estimate exact") {
  Scenario s = make_check_scenario(derive_key({11}), 4, 16);
  s.tau_d = 0.0;
  const ChannelRealization real = sample_realization(s, 3);
  for (std::size_t i = 0; i < real.g.data.size(); ++i) {
    CHECK(real.g.data[i] == real.g_hat.data[i]);
  }
}

TEST_CASE("same trial gives bit-identical realizations") {
  const Scenario s = make_check_scenario(derive_key({12}), 5, 24);
  const ChannelRealization a = sample_realization(s, 17);
  const ChannelRealization b = sample_realization(s, 17);
  CHECK(a.d == b.d);
  CHECK(a.h == b.h);
  CHECK(a.g_hat.data == b.g_hat.data);
  CHECK(a.g.data == b.g.data);
  CHECK(a.beta.data == b.beta.data);

  const ChannelRealization c = sample_realization(s, 18);
  CHECK(a.g_hat.data != c.g_hat.data);
  const ChannelRealization d = sample_realization(s, 17, /*attempt=*/1);
  CHECK(a.g_hat.data != d.g_hat.data);
}

TEST_CASE("realizations nest when only M grows") {
  Scenario s = make_check_scenario(derive_key({13}), 4, 16);
  Scenario wide = s;
  wide.M = 32;
  const ChannelRealization small = sample_realization(s, 2);
  const ChannelRealization big = sample_realization(wide, 2);
  for (std::size_t k = 0; k < s.K; ++k) {
    for (std::size_t m = 0; m < s.M; ++m) {
      CHECK(small.g_hat(m, k) == big.g_hat(m, k));
    }
    CHECK(small.h[k] == big.h[k]);
  }
}

TEST_CASE("small-scale gain has unit mean power") {
  const Scenario s = make_check_scenario(derive_key({14}), 4, 8);
  double sum = 0.0;
  const std::size_t trials = 10000;
  for (std::size_t t = 0; t < trials; ++t) {
    const ChannelRealization real = sample_realization(s, t);
    for (const cplx& h : real.h) sum += std::norm(h);
  }
  const double mean = sum / static_cast<double>(trials * s.K);
  CHECK(mean > 0.97);
  CHECK(mean < 1.03);
}

TEST_CASE("first-hop envelope is Rayleigh (KS at 1%)") {
  const Scenario s = make_check_scenario(derive_key({15}), 4, 8);
  std::vector<double> samples;
  samples.reserve(100000);
  for (std::size_t t = 0; samples.size() < 100000; ++t) {
    const ChannelRealization real = sample_realization(s, t);
    for (const cplx& h : real.h) samples.push_back(std::abs(h));
  }
  std::sort(samples.begin(), samples.end());
  const double n = static_cast<double>(samples.size());
  double d_stat = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double f = 1.0 - std::exp(-samples[i] * samples[i]);
    d_stat = std::max(d_stat, std::abs(f - static_cast<double>(i + 1) / n));
    d_stat = std::max(d_stat, std::abs(f - static_cast<double>(i) / n));
  }
  CHECK(d_stat < 1.628 / std::sqrt(n));  // 1% critical value
}

TEST_CASE("estimate-actual correlation follows the CSI coefficient") {
  Scenario s = make_check_scenario(derive_key({16}), 4, 32);
  s.tau_d = 0.6;
  s.pathloss.exponent_hop2 = 0.0;  // unit-variance entries on both matrices
  double cross = 0.0, ghat2 = 0.0, g2 = 0.0;
  for (std::size_t t = 0; t < 400; ++t) {
    const ChannelRealization real = sample_realization(s, t);
    for (std::size_t i = 0; i < real.g.data.size(); ++i) {
      cross += (std::conj(real.g_hat.data[i]) * real.g.data[i]).real();
      ghat2 += std::norm(real.g_hat.data[i]);
      g2 += std::norm(real.g.data[i]);
    }
  }
  const double corr = cross / std::sqrt(ghat2 * g2);
  CHECK(corr == doctest::Approx(std::sqrt(1.0 - 0.36)).epsilon(0.01));
}

TEST_CASE("invalid scenario is rejected with the field name") {
  Scenario s = make_check_scenario(derive_key({17}), 3, 8);
  s.q_w[1] = -1.0;
  CHECK_THROWS_WITH_AS(sample_realization(s, 0), doctest::Contains("q_w"), ConfigError);
}
