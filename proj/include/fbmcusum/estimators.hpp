#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "fbmcusum/types.hpp"

namespace fbmcusum {

/// First-order increments Z_{j+1} - Z_j, or second-order increments
/// Z_{j+1} - 2 Z_j + Z_{j-1}.
struct IncrementSeries {
  Order order = Order::First;
  std::vector<double> values;
  double delta = 0.0;

  std::size_t size() const { return values.size(); }
};

enum class HurstMethod { KnownSigma, QvRatio };

struct HurstEstimate {
  double hurst = 0.0;
  HurstMethod method = HurstMethod::QvRatio;
  std::size_t n = 0;

  /// False when the estimate falls outside (0, 1). Values are never clamped.
  bool in_range() const { return hurst > 0.0 && hurst < 1.0; }
};

std::string to_string(HurstMethod method);

IncrementSeries increments(const SamplePath& path, Order order);

/// Sum of the first `up_to` squared entries (all entries by default).
double quad_var(const IncrementSeries& inc, std::optional<std::size_t> up_to = std::nullopt);

/// 1/2 - log(sum of squared increments) / (2 log n). Only consistent when sigma = 1.
HurstEstimate hurst_known_sigma(const SamplePath& path);

/// log of the ratio of overlapping two-step to one-step quadratic variation,
/// divided by 2 log 2. Scale free.
HurstEstimate hurst_qv_ratio(const SamplePath& path);

/// sigma-hat with sigma-hat^2 = n^{2H - 1} * sum of squared increments.
double sigma_plugin(const SamplePath& path, double hurst);

}  // namespace fbmcusum
