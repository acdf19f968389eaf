#pragma once

#include <Eigen/Core>

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "fbmcusum/random.hpp"
#include "fbmcusum/types.hpp"

namespace fbmcusum {

/// Largest number of increments the dense Cholesky synthesizer accepts.
inline constexpr std::size_t kMaxSynthesisLength = 8192;

/// Autocorrelation of unit-grid fractional Gaussian noise,
/// rho(r) = (|r+1|^{2H} + |r-1|^{2H} - 2|r|^{2H}) / 2.
double fgn_autocorrelation(double hurst, std::size_t lag);

/// Covariance of `length` consecutive fGn increments on the grid of mesh 1/n:
/// entry(j, k) = sigma^2 n^{-2H} rho(|j - k|).
struct FgnCovariance {
  HurstParams params;
  std::size_t n = 1;
  std::size_t length = 0;  // 0 means n

  std::size_t dim() const { return length == 0 ? n : length; }
  double variance() const;
  double entry(std::size_t j, std::size_t k) const;
  Eigen::MatrixXd dense() const;
};

/// Lower Cholesky factor L with L L^T = cov. No jitter is added: a
/// non-positive pivot raises NumericalError.
Eigen::MatrixXd cholesky_factor(const FgnCovariance& cov);

/// Draws exact fGn blocks from a precomputed Cholesky factor. Immutable after
/// construction and safe to share between threads.
class FgnSampler {
 public:
  /// `length` increments on the grid of mesh 1/grid_n (grid_n = 0 means length).
  FgnSampler(HurstParams params, std::size_t length, std::size_t grid_n = 0);

  std::size_t length() const { return static_cast<std::size_t>(factor_.rows()); }
  const HurstParams& params() const { return params_; }
  const Eigen::MatrixXd& factor() const { return factor_; }

  void draw(NormalStream& normals, std::span<double> out) const;
  std::vector<double> draw(NormalStream& normals) const;

 private:
  HurstParams params_;
  Eigen::MatrixXd factor_;
};

/// Path sampler for a single change of regime at floor(n * theta).
class ChangeSampler {
 public:
  ChangeSampler(const ChangeSpec& spec, std::size_t n);

  std::size_t n() const { return n_; }
  std::size_t break_index() const { return break_index_; }
  SamplePath draw(NormalStream& normals) const;

 private:
  ChangeSpec spec_;
  std::size_t n_;
  std::size_t break_index_;
  std::optional<FgnSampler> pre_;
  std::optional<FgnSampler> post_;
};

std::vector<double> sample_fgn(const HurstParams& params, std::size_t n, Seed seed);

SamplePath sample_path(const HurstParams& params, std::size_t n, Seed seed);

SamplePath sample_path_with_change(const ChangeSpec& spec, std::size_t n, Seed seed);

}  // namespace fbmcusum
