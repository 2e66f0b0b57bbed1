#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <initializer_list>
#include <numbers>

namespace cfmtc {

// Counter-style deterministic RNG.
//
// Every random quantity in the simulator is drawn from an Rng whose key is
// derived from the scenario seed plus a stream tag and the integer indices
// that identify the draw (trial, attempt, matrix entry, ...).  The scheme is
// fixed here, independent of platform and standard library, so identical
// inputs give bit-identical outputs everywhere, and draws indexed by (m, k)
// are nested across different matrix sizes.

// splitmix64 finalizer (Vigna); full-avalanche 64-bit mix.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

// Key derivation: fold each component into the running key through mix64.
constexpr std::uint64_t derive_key(std::initializer_list<std::uint64_t> parts) {
  std::uint64_t key = kGolden;
  for (std::uint64_t p : parts) key = mix64(key ^ mix64(p + kGolden));
  return key;
}

// Stream tags.  Values are part of the determinism contract; never reorder.
enum StreamTag : std::uint64_t {
  kTagPlacementTn = 1,
  kTagPlacementFan = 2,
  kTagPlacementCan = 3,
  kTagFirstHopFading = 4,
  kTagSecondHopEstimate = 5,
  kTagCsiError = 6,
  kTagRandomBandwidth = 7,
  kTagRandomOffloading = 8,
  kTagMaterialize = 9,
  kTagCheckScenario = 10,
};

class Rng {
 public:
  explicit Rng(std::uint64_t key) : state_(key) {}

  std::uint64_t bits() {
    state_ += kGolden;
    return mix64(state_);
  }

  // Uniform on [0, 1).
  double uniform01() { return static_cast<double>(bits() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  std::uint64_t below(std::uint64_t n) { return bits() % n; }

  bool coin() { return (bits() & 1u) != 0; }

  // Standard normal via Box-Muller; second value of each pair is cached.
  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    // 1 - u in (0, 1] keeps the log argument away from zero.
    const double r = std::sqrt(-2.0 * std::log(1.0 - uniform01()));
    const double theta = 2.0 * std::numbers::pi * uniform01();
    spare_ = r * std::sin(theta);
    has_spare_ = true;
    return r * std::cos(theta);
  }

  // Circularly symmetric complex normal with unit total variance.
  std::complex<double> cnormal() {
    const double s = std::numbers::sqrt2 / 2.0;
    const double re = normal() * s;
    const double im = normal() * s;
    return {re, im};
  }

 private:
  std::uint64_t state_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace cfmtc
