#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

namespace cfmtc::stats {

inline double mean(const std::vector<double>& x) {
  double sum = 0.0;
  for (double v : x) sum += v;
  return x.empty() ? 0.0 : sum / static_cast<double>(x.size());
}

inline double sample_sd(const std::vector<double>& x) {
  if (x.size() < 2) return 0.0;
  const double m = mean(x);
  double acc = 0.0;
  for (double v : x) acc += (v - m) * (v - m);
  return std::sqrt(acc / static_cast<double>(x.size() - 1));
}

// Half-width of the normal-approximation 95% confidence interval of the mean.
inline double ci95_halfwidth(const std::vector<double>& x) {
  if (x.size() < 2) return 0.0;
  return 1.959963984540054 * sample_sd(x) / std::sqrt(static_cast<double>(x.size()));
}

inline double median(std::vector<double> x) {
  if (x.empty()) return 0.0;
  const std::size_t mid = x.size() / 2;
  std::nth_element(x.begin(), x.begin() + mid, x.end());
  double hi = x[mid];
  if (x.size() % 2 == 1) return hi;
  std::nth_element(x.begin(), x.begin() + mid - 1, x.begin() + mid);
  return 0.5 * (x[mid - 1] + hi);
}

}  // namespace cfmtc::stats
