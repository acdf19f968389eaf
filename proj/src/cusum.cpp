#include "fbmcusum/cusum.hpp"

#include <algorithm>
#include <cmath>

#include "fbmcusum/estimators.hpp"
#include "fbmcusum/ks.hpp"

namespace fbmcusum {

namespace {

// Relative to gamma-hat(0): below this a bandwidth estimate is treated as zero.
constexpr double kDegenerateRelative = 1e-12;

double report_critical_value(std::size_t i) {
  static const std::vector<double> q = [] {
    std::vector<double> v;
    for (double level : kReportLevels) v.push_back(ks_quantile(1.0 - level));
    return v;
  }();
  return q[i];
}

}  // namespace

std::string to_string(Kernel kernel) {
  switch (kernel) {
    case Kernel::Bartlett:
      return "bartlett";
    case Kernel::TruncatedFlat:
      return "flat";
    case Kernel::AllLagsLiteral:
      return "literal";
  }
  return "unknown";
}

std::size_t cube_root_bandwidth(std::size_t length) {
  std::size_t l = 0;
  while ((l + 1) * (l + 1) * (l + 1) <= length) ++l;
  return l;
}

std::size_t LrvConfig::resolve_bandwidth(std::size_t length) const {
  if (length < 2) throw std::length_error("long-run variance needs at least two observations");
  const std::size_t l = bandwidth.value_or(std::max<std::size_t>(1, cube_root_bandwidth(length)));
  return std::min(l, length - 1);
}

double sample_autocovariance(std::span<const double> x, std::size_t lag) {
  const std::size_t N = x.size();
  if (lag >= N) return 0.0;
  double s = 0.0;
  for (std::size_t j = 0; j + lag < N; ++j) s += x[j] * x[j + lag];
  return s / static_cast<double>(N);
}

double weighted_autocovariance_sum(std::span<const double> x, const LrvConfig& config) {
  const std::size_t N = x.size();
  if (N < 2) throw std::length_error("long-run variance needs at least two observations");
  double total = sample_autocovariance(x, 0);
  if (config.kernel == Kernel::AllLagsLiteral) {
    for (std::size_t k = 1; k < N; ++k) total += 2.0 * sample_autocovariance(x, k);
    return total;
  }
  const std::size_t l = config.resolve_bandwidth(N);
  for (std::size_t k = 1; k <= l; ++k) {
    const double w = config.kernel == Kernel::Bartlett
                         ? 1.0 - static_cast<double>(k) / static_cast<double>(l + 1)
                         : 1.0;
    total += 2.0 * w * sample_autocovariance(x, k);
  }
  return total;
}

double long_run_variance(std::span<const double> x, const LrvConfig& config) {
  const double gamma0 = sample_autocovariance(x, 0);
  if (!(gamma0 > 0.0)) throw DegenerateDataError("long-run variance of a constant series");
  const double value = weighted_autocovariance_sum(x, config);
  if (config.kernel == Kernel::AllLagsLiteral) return value;
  if (!(value > kDegenerateRelative * gamma0)) {
    throw DegenerateDataError("long-run variance estimate is not positive (" + std::to_string(value) + ")");
  }
  return value;
}

bool CusumResult::rejects(double alpha) const {
  if (auto it = reject_at.find(alpha); it != reject_at.end()) return it->second;
  return statistic > ks_quantile(1.0 - alpha);
}

CusumResult cusum_from_squares(std::span<const double> squares, Order order, const LrvConfig& config,
                               std::size_t n) {
  const std::size_t N = squares.size();
  if (N < 2) throw std::length_error("cusum needs at least two squared increments");

  double total = 0.0;
  for (double x : squares) total += x;
  const double mean = total / static_cast<double>(N);
  std::vector<double> dev(N);
  for (std::size_t j = 0; j < N; ++j) dev[j] = squares[j] - mean;

  if (config.kernel == Kernel::AllLagsLiteral) {
    throw DegenerateDataError(
        "the all-lags long-run variance with full-sample centering is identically zero; "
        "use a bandwidth kernel");
  }
  const double lrv = long_run_variance(dev, config);

  CusumResult out;
  out.order = order;
  out.n = n == 0 ? N : n;
  out.long_run_sd = std::sqrt(lrv);
  out.trace.resize(N);
  const double scale = 1.0 / (std::sqrt(static_cast<double>(N)) * out.long_run_sd);
  // P_m - (m/N) P_N vanishes exactly at m = N.
  double partial = 0.0;
  for (std::size_t m = 1; m <= N; ++m) {
    partial += squares[m - 1];
    const double frac = static_cast<double>(m) / static_cast<double>(N);
    out.trace[m - 1] = (partial - frac * total) * scale;
  }
  for (std::size_t m = 1; m <= N; ++m) {
    if (std::abs(out.trace[m - 1]) > out.statistic) {
      out.statistic = std::abs(out.trace[m - 1]);
      out.argmax_index = m;
    }
  }
  if (out.argmax_index == 0) out.argmax_index = 1;
  out.p_value = 1.0 - ks_cdf(out.statistic);
  for (std::size_t i = 0; i < kReportLevels.size(); ++i) {
    out.reject_at[kReportLevels[i]] = out.statistic > report_critical_value(i);
  }
  return out;
}

CusumResult cusum_statistic(const SamplePath& path, Order order, const LrvConfig& config) {
  if (path.n() < 8) throw std::length_error("cusum statistic needs n >= 8");
  const IncrementSeries inc = increments(path, order);
  std::vector<double> squares(inc.size());
  for (std::size_t j = 0; j < inc.size(); ++j) squares[j] = inc.values[j] * inc.values[j];
  return cusum_from_squares(squares, order, config, path.n());
}

CusumResult run_test(const SamplePath& path, double alpha, Order order, const LrvConfig& config) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw std::domain_error("test level must lie in (0, 1), got " + std::to_string(alpha));
  }
  CusumResult out = cusum_statistic(path, order, config);
  out.reject_at[alpha] = out.statistic > ks_quantile(1.0 - alpha);
  return out;
}

}  // namespace fbmcusum
