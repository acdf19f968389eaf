#pragma once

namespace fbmcusum {

/// Law of the supremum of |W_t - t W_1| over [0, 1].
///
/// cdf(x) = 1 - 2 sum_{k>=1} (-1)^{k-1} exp(-2 k^2 x^2). For small x the
/// alternating series converges slowly, so there the Jacobi-dual form
/// sqrt(2 pi)/x sum_{k>=1} exp(-(2k-1)^2 pi^2 / (8 x^2)) is used instead.
double ks_cdf(double x);

/// 1 - ks_cdf(x).
double ks_survival(double x);

/// Generalized inverse of ks_cdf for p in (0, 1); throws std::domain_error otherwise.
double ks_quantile(double p);

}  // namespace fbmcusum
