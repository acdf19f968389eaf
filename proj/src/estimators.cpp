#include "fbmcusum/estimators.hpp"

#include <cmath>
#include <numbers>

namespace fbmcusum {

std::string to_string(HurstMethod method) {
  return method == HurstMethod::KnownSigma ? "known-sigma" : "qv-ratio";
}

IncrementSeries increments(const SamplePath& path, Order order) {
  const std::size_t n = path.n();
  if (n < 2) throw std::length_error("increments need a path with n >= 2");
  const auto& z = path.values();
  IncrementSeries out{order, {}, path.delta()};
  if (order == Order::First) {
    out.values.resize(n);
    for (std::size_t j = 0; j < n; ++j) out.values[j] = z[j + 1] - z[j];
  } else {
    out.values.resize(n - 1);
    for (std::size_t j = 1; j < n; ++j) out.values[j - 1] = z[j + 1] - 2.0 * z[j] + z[j - 1];
  }
  return out;
}

double quad_var(const IncrementSeries& inc, std::optional<std::size_t> up_to) {
  const std::size_t m = up_to.value_or(inc.size());
  if (m < 1 || m > inc.size()) {
    throw std::out_of_range("quad_var upper index " + std::to_string(m) + " outside [1, " +
                            std::to_string(inc.size()) + "]");
  }
  double s = 0.0;
  for (std::size_t j = 0; j < m; ++j) s += inc.values[j] * inc.values[j];
  return s;
}

HurstEstimate hurst_known_sigma(const SamplePath& path) {
  const std::size_t n = path.n();
  if (n < 2) throw std::domain_error("hurst_known_sigma needs n >= 2");
  const double qv = quad_var(increments(path, Order::First));
  if (!(qv > 0.0)) throw DegenerateDataError("quadratic variation is zero");
  const double h = 0.5 - std::log(qv) / (2.0 * std::log(static_cast<double>(n)));
  return {h, HurstMethod::KnownSigma, n};
}

HurstEstimate hurst_qv_ratio(const SamplePath& path) {
  const std::size_t n = path.n();
  if (n < 3) throw std::domain_error("hurst_qv_ratio needs n >= 3");
  const auto& z = path.values();
  double two_step = 0.0;
  for (std::size_t j = 0; j + 2 <= n; ++j) {
    const double d = z[j + 2] - z[j];
    two_step += d * d;
  }
  const double one_step = quad_var(increments(path, Order::First));
  if (!(one_step > 0.0) || !(two_step > 0.0)) {
    throw DegenerateDataError("a quadratic variation in the ratio estimator is zero");
  }
  const double h = std::log(two_step / one_step) / (2.0 * std::numbers::ln2);
  return {h, HurstMethod::QvRatio, n};
}

double sigma_plugin(const SamplePath& path, double hurst) {
  if (!(hurst > 0.0 && hurst < 1.0)) {
    throw std::domain_error("plug-in Hurst exponent must lie in (0, 1), got " + std::to_string(hurst));
  }
  const double qv = quad_var(increments(path, Order::First));
  const double n = static_cast<double>(path.n());
  return std::sqrt(std::pow(n, 2.0 * hurst - 1.0) * qv);
}

}  // namespace fbmcusum
