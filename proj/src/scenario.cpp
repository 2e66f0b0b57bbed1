#include "cfmtc/scenario.hpp"

#include <cmath>
#include <cstdio>
#include <numeric>

#include "cfmtc/errors.hpp"

namespace cfmtc {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw ConfigError("invalid scenario: " + what);
}

void require_len(std::size_t len, std::size_t k, const std::string& field) {
  require(len == k, field + " must have length K=" + std::to_string(k) +
                        ", got " + std::to_string(len));
}

}  // namespace

void validate(const Scenario& s) {
  require(s.K >= 1, "system.K must be >= 1");
  require(s.M >= 1, "system.M must be >= 1");
  require(s.B_hz > 0, "system.B_hz must be > 0");
  require(s.p_b_w > 0, "system.p_b_w must be > 0");
  require(s.rho > 0, "system.rho must be > 0");
  require(s.tau_d >= 0.0 && s.tau_d <= 1.0, "system.tau_d must lie in [0, 1]");
  require(s.sigma2_first_w > 0, "system.sigma2_first_w must be > 0");
  require(s.sigma2 > 0, "system.sigma2 must be > 0");

  require_len(s.q_w.size(), s.K, "system.q_w");
  for (double q : s.q_w) require(q > 0, "system.q_w entries must be > 0");

  require_len(s.tasks.size(), s.K, "tasks");
  for (const TaskSpec& t : s.tasks) {
    require(t.l_bits > 0, "tasks.l_bits must be > 0");
    require(t.cycles_per_bit > 0, "tasks.cycles_per_bit must be > 0");
    require(t.mu >= 0.0 && t.mu <= 1.0, "tasks.mu must lie in [0, 1]");
  }

  require_len(s.w.size(), s.K, "tasks.w");
  for (double w : s.w) require(w > 0, "tasks.w entries must be > 0");

  require_len(s.compute.f_fan_hz.size(), s.K, "compute.f_fan_hz");
  require_len(s.compute.f_cpu_hz.size(), s.K, "compute.f_cpu_hz");
  require_len(s.compute.p_cn_j_per_cycle.size(), s.K, "compute.p_cn_j_per_cycle");
  require(s.compute.f_cpu_max_hz > 0, "compute.f_cpu_max_hz must be > 0");
  for (double f : s.compute.f_fan_hz) require(f > 0, "compute.f_fan_hz entries must be > 0");
  for (double f : s.compute.f_cpu_hz) {
    require(f > 0, "compute.f_cpu_hz entries must be > 0");
    require(f <= s.compute.f_cpu_max_hz,
            "compute.f_cpu_hz entries must not exceed compute.f_cpu_max_hz");
  }
  for (double p : s.compute.p_cn_j_per_cycle) {
    require(p >= 0, "compute.p_cn_j_per_cycle entries must be >= 0");
  }

  require(s.pathloss.d_ref_m > 0, "pathloss.d_ref_m must be > 0");
  require(s.pathloss.exponent >= 0, "pathloss.exponent must be >= 0");
  require(s.pathloss.exponent_hop2 >= 0, "pathloss.exponent_hop2 must be >= 0");
  require(s.pathloss.extent_m > 0, "pathloss.extent_m must be > 0");

  require(s.cond_threshold > 1, "experiment.cond_threshold must be > 1");
  require(s.resample_cap >= 1, "experiment.resample_cap must be >= 1");
}

std::uint64_t scenario_hash(const Scenario& s) {
  std::string buf;
  buf.reserve(512);
  char tmp[64];
  auto put = [&](double v) {
    std::snprintf(tmp, sizeof(tmp), "%.17g;", v);
    buf += tmp;
  };
  put(static_cast<double>(s.K));
  put(static_cast<double>(s.M));
  put(s.B_hz);
  put(s.p_b_w);
  put(s.rho);
  put(s.tau_d);
  put(s.sigma2_first_w);
  put(s.sigma2);
  put(s.pathloss.d_ref_m);
  put(s.pathloss.exponent);
  put(s.pathloss.exponent_hop2);
  put(s.pathloss.extent_m);
  put(s.compute.f_cpu_max_hz);
  put(static_cast<double>(s.seed));
  for (double q : s.q_w) put(q);
  for (double w : s.w) put(w);
  for (const TaskSpec& t : s.tasks) {
    put(t.l_bits);
    put(t.cycles_per_bit);
    put(t.mu);
  }
  for (double f : s.compute.f_fan_hz) put(f);
  for (double f : s.compute.f_cpu_hz) put(f);
  for (double p : s.compute.p_cn_j_per_cycle) put(p);

  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : buf) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

double total_q(const Scenario& s) {
  return std::accumulate(s.q_w.begin(), s.q_w.end(), 0.0);
}

}  // namespace cfmtc
