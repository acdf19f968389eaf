#pragma once

#include <cstddef>

namespace fbmcusum {

/// gamma = sum over r in Z of rho(r)^2 for fGn with Hurst exponent H < 3/4.
///
/// 2 * gamma * sigma^4 is the long-run variance of the squared increments
/// rescaled by n^{2H}.
struct GammaSeries {
  double hurst = 0.5;
  double value = 1.0;
  std::size_t truncation_lag = 0;  // lags 1..truncation_lag summed explicitly
  double tail_bound = 0.0;         // bound on the error left after the tail correction
};

/// Sums rho(r)^2 explicitly up to a lag R and adds the remaining tail through
/// the asymptotic expansion rho(r)^2 = sum_m a_m r^{4H - 2m} and Hurwitz zeta
/// values. R doubles until the bound on the neglected terms is below `tol`.
///
/// Throws std::domain_error unless 0 < hurst < 3/4 and tol > 0.
GammaSeries gamma_series(double hurst, double tol = 1e-12);

/// Hurwitz zeta(s, a) = sum_{k>=0} (a + k)^{-s} for s > 1, a >= 1.
double hurwitz_zeta(double s, double a);

}  // namespace fbmcusum
