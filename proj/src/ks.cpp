#include "fbmcusum/ks.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace fbmcusum {

namespace {

constexpr double kTermTol = 1e-12;
constexpr double kDualBelow = 1.0;

double alternating_tail(double x) {
  // 2 sum (-1)^{k-1} exp(-2 k^2 x^2)
  double sum = 0.0;
  for (int k = 1;; ++k) {
    const double term = std::exp(-2.0 * k * k * x * x);
    sum += (k % 2 == 1) ? term : -term;
    if (term < kTermTol) break;
  }
  return 2.0 * sum;
}

double dual_cdf(double x) {
  const double c = std::numbers::pi * std::numbers::pi / (8.0 * x * x);
  double sum = 0.0;
  for (int k = 1;; ++k) {
    const double odd = 2.0 * k - 1.0;
    const double term = std::exp(-odd * odd * c);
    sum += term;
    if (term < kTermTol * sum || term == 0.0) break;
  }
  return std::sqrt(2.0 * std::numbers::pi) / x * sum;
}

}  // namespace

double ks_cdf(double x) {
  if (!(x > 0.0)) return 0.0;
  if (x < kDualBelow) return dual_cdf(x);
  return 1.0 - alternating_tail(x);
}

double ks_survival(double x) {
  if (!(x > 0.0)) return 1.0;
  if (x < kDualBelow) return 1.0 - dual_cdf(x);
  return alternating_tail(x);
}

double ks_quantile(double p) {
  if (!(p > 0.0 && p < 1.0)) {
    throw std::domain_error("KS quantile level must lie in (0, 1), got " + std::to_string(p));
  }
  double lo = 0.2;
  double hi = 5.0;
  while (ks_cdf(lo) > p) lo *= 0.5;
  while (ks_cdf(hi) < p) hi *= 2.0;
  for (int it = 0; it < 200 && hi - lo > 1e-13; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (ks_cdf(mid) < p) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return hi;
}

}  // namespace fbmcusum
