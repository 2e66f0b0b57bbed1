#pragma once

#include <string>
#include <vector>

#include "cfmtc/cost.hpp"
#include "cfmtc/rng.hpp"
#include "cfmtc/scenario.hpp"

namespace cfmtc {

enum class BandwidthPolicy { oba, tdma, noma, rba };
enum class TaskPolicy { oto, ro, sot, argmin };

const char* to_string(BandwidthPolicy p);
const char* to_string(TaskPolicy p);
BandwidthPolicy bandwidth_policy_from_string(const std::string& name);
TaskPolicy task_policy_from_string(const std::string& name);

// Equal 1/K time shares of the full band.  Delay runs at the effective
// throughput B log2(1+snr)/K; transmission energy is charged for airtime
// only, i.e. at the full-band rate.
FirstHopRates tdma_policy(const Scenario& scenario, const ChannelRealization& real);

// All TNs superimposed on the full band, SIC decoding in descending
// received-power order (ties by index).
FirstHopRates noma_policy(const Scenario& scenario, const ChannelRealization& real);

// Uniform draw from the simplex (normalized exponentials).
std::vector<double> random_bandwidth(const Scenario& scenario, Rng& rng);

// Independent fair coin per task.
std::vector<int> random_offloading(const Scenario& scenario, Rng& rng);

}  // namespace cfmtc
