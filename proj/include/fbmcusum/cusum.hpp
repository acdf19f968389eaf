#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fbmcusum/types.hpp"

namespace fbmcusum {

enum class Kernel {
  Bartlett,        // w(k) = 1 - |k| / (l + 1)
  TruncatedFlat,   // w(k) = 1 for |k| <= l
  AllLagsLiteral,  // every lag |k| <= N - 1 with weight 1; identically zero, diagnostic only
};

std::string to_string(Kernel kernel);

/// Kernel and bandwidth for the long-run variance in the cusum denominator.
struct LrvConfig {
  Kernel kernel = Kernel::Bartlett;
  std::optional<std::size_t> bandwidth;  // nullopt: floor(N^{1/3})

  /// Bandwidth used for a series of length N, clipped to N - 1.
  std::size_t resolve_bandwidth(std::size_t length) const;
};

/// floor(N^{1/3}) computed in integers.
std::size_t cube_root_bandwidth(std::size_t length);

/// gamma-hat(k) = (1/N) sum_j x_j x_{j+k}.
double sample_autocovariance(std::span<const double> deviations, std::size_t lag);

/// sum_{|k|<=l} w(k) gamma-hat(k) with no positivity check.
double weighted_autocovariance_sum(std::span<const double> deviations, const LrvConfig& config);

/// Long-run variance of a centered series.
///
/// Throws DegenerateDataError if the input is constant or if a bandwidth
/// kernel yields a non-positive value. The all-lags mode returns its (zero up
/// to rounding) value unchecked so the degeneracy can be inspected.
double long_run_variance(std::span<const double> deviations, const LrvConfig& config);

/// Conventional test levels reported with every result.
inline const std::vector<double> kReportLevels = {0.10, 0.05, 0.01};

struct CusumResult {
  double statistic = 0.0;      // max_m |S_m|
  std::vector<double> trace;   // S_1, ..., S_N
  std::size_t argmax_index = 0;  // smallest m attaining the maximum, 1-based
  double long_run_sd = 0.0;
  Order order = Order::First;
  std::size_t n = 0;           // number of first-order increments of the path
  double p_value = 1.0;
  std::map<double, bool> reject_at;

  /// statistic > q_{1 - alpha} of the Kolmogorov-Smirnov law.
  bool rejects(double alpha) const;
};

/// Self-normalized cusum of a series of squares x_1..x_N:
/// S_m = N^{-1/2} sum_{j<=m} (x_j - mean x) / sqrt(long-run variance).
/// `n` is stored for break-date conversion (0 means N).
CusumResult cusum_from_squares(std::span<const double> squares, Order order, const LrvConfig& config,
                               std::size_t n = 0);

/// T_n (first order, N = n) or T_n^(2) (second order, N = n - 1). Needs n >= 8.
CusumResult cusum_statistic(const SamplePath& path, Order order, const LrvConfig& config = {});

/// cusum_statistic plus the decision at `alpha` recorded in reject_at.
CusumResult run_test(const SamplePath& path, double alpha, Order order, const LrvConfig& config = {});

}  // namespace fbmcusum
