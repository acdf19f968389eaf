#include "fbmcusum/fgn.hpp"

#include <Eigen/Cholesky>

#include <cmath>
#include <string>

namespace fbmcusum {

namespace {

// Beyond this lag the direct formula loses digits to cancellation between
// terms of size r^{2H}; the log1p/expm1 form keeps relative accuracy.
constexpr std::size_t kStableLag = 64;

void check_hurst(double hurst) {
  if (!(hurst > 0.0 && hurst < 1.0)) {
    throw std::domain_error("Hurst exponent must lie in (0, 1), got " + std::to_string(hurst));
  }
}

void check_length(std::size_t length) {
  if (length == 0) throw std::length_error("fGn length must be at least 1");
  if (length > kMaxSynthesisLength) {
    throw std::length_error("fGn length " + std::to_string(length) + " exceeds the synthesis limit " +
                            std::to_string(kMaxSynthesisLength));
  }
}

}  // namespace

double fgn_autocorrelation(double hurst, std::size_t lag) {
  check_hurst(hurst);
  if (lag == 0) return 1.0;
  const double two_h = 2.0 * hurst;
  const double r = static_cast<double>(lag);
  if (lag < kStableLag || hurst == 0.5) {
    return 0.5 * (std::pow(r + 1.0, two_h) + std::pow(r - 1.0, two_h) - 2.0 * std::pow(r, two_h));
  }
  const double u = 1.0 / r;
  return 0.5 * std::pow(r, two_h) *
         (std::expm1(two_h * std::log1p(u)) + std::expm1(two_h * std::log1p(-u)));
}

double FgnCovariance::variance() const {
  return params.sigma * params.sigma * std::pow(static_cast<double>(n), -2.0 * params.hurst);
}

double FgnCovariance::entry(std::size_t j, std::size_t k) const {
  const std::size_t lag = j > k ? j - k : k - j;
  return variance() * fgn_autocorrelation(params.hurst, lag);
}

Eigen::MatrixXd FgnCovariance::dense() const {
  params.validate();
  const std::size_t d = dim();
  std::vector<double> acf(d);
  for (std::size_t r = 0; r < d; ++r) acf[r] = fgn_autocorrelation(params.hurst, r);
  const double var = variance();
  Eigen::MatrixXd cov(d, d);
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t k = 0; k < d; ++k) {
      cov(j, k) = var * acf[j > k ? j - k : k - j];
    }
  }
  return cov;
}

Eigen::MatrixXd cholesky_factor(const FgnCovariance& cov) {
  if (cov.n == 0) throw std::length_error("covariance needs n >= 1");
  Eigen::LLT<Eigen::MatrixXd> llt(cov.dense());
  if (llt.info() != Eigen::Success) {
    throw NumericalError("fGn covariance is numerically indefinite (H=" +
                         std::to_string(cov.params.hurst) + ", size " + std::to_string(cov.dim()) + ")");
  }
  Eigen::MatrixXd factor = llt.matrixL();
  for (Eigen::Index i = 0; i < factor.rows(); ++i) {
    if (!(factor(i, i) > 0.0)) throw NumericalError("non-positive Cholesky pivot");
  }
  return factor;
}

FgnSampler::FgnSampler(HurstParams params, std::size_t length, std::size_t grid_n)
    : params_(params) {
  params_.validate();
  check_length(length);
  factor_ = cholesky_factor(FgnCovariance{params_, grid_n == 0 ? length : grid_n, length});
}

void FgnSampler::draw(NormalStream& normals, std::span<double> out) const {
  const auto d = factor_.rows();
  if (static_cast<Eigen::Index>(out.size()) != d) throw std::length_error("output span has wrong length");
  Eigen::VectorXd z(d);
  normals.fill(std::span<double>(z.data(), static_cast<std::size_t>(d)));
  Eigen::Map<Eigen::VectorXd>(out.data(), d).noalias() = factor_.triangularView<Eigen::Lower>() * z;
}

std::vector<double> FgnSampler::draw(NormalStream& normals) const {
  std::vector<double> out(length());
  draw(normals, out);
  return out;
}

ChangeSampler::ChangeSampler(const ChangeSpec& spec, std::size_t n)
    : spec_(spec), n_(n), break_index_(spec.break_index(n)) {
  spec_.validate();
  if (n < 4) throw std::length_error("a path with a change needs n >= 4");
  if (break_index_ < 1 || break_index_ > n - 1) {
    throw std::domain_error("floor(n * theta) = " + std::to_string(break_index_) +
                            " leaves one regime without increments");
  }
  if (spec_.pre == spec_.post) {
    pre_.emplace(spec_.pre, n, n);
    return;
  }
  pre_.emplace(spec_.pre, break_index_, n);
  if (spec_.glue == Glue::IndependentPieces) {
    post_.emplace(spec_.post, n - break_index_, n);
  } else {
    post_.emplace(spec_.post, n, n);
  }
}

SamplePath ChangeSampler::draw(NormalStream& normals) const {
  if (!post_) return SamplePath::from_increments(pre_->draw(normals));

  const std::size_t k = break_index_;
  std::vector<double> inc(n_);
  pre_->draw(normals, std::span<double>(inc.data(), k));

  const std::size_t tail = n_ - k;
  if (spec_.glue == Glue::IndependentPieces) {
    post_->draw(normals, std::span<double>(inc.data() + k, tail));
    return SamplePath::from_increments(inc);
  }

  // Conditional continuation: with L = [[L11, 0], [L21, L22]] the post-regime
  // factor, X2 | X1 = x1 is L21 L11^{-1} x1 + L22 z2.
  const Eigen::MatrixXd& L = post_->factor();
  const auto ki = static_cast<Eigen::Index>(k);
  const auto ti = static_cast<Eigen::Index>(tail);
  const Eigen::Map<const Eigen::VectorXd> x1(inc.data(), ki);
  const Eigen::VectorXd w = L.topLeftCorner(ki, ki).triangularView<Eigen::Lower>().solve(x1);
  Eigen::VectorXd z2(ti);
  normals.fill(std::span<double>(z2.data(), tail));
  Eigen::Map<Eigen::VectorXd>(inc.data() + k, ti).noalias() =
      L.bottomLeftCorner(ti, ki) * w + L.bottomRightCorner(ti, ti).triangularView<Eigen::Lower>() * z2;
  return SamplePath::from_increments(inc);
}

std::vector<double> sample_fgn(const HurstParams& params, std::size_t n, Seed seed) {
  NormalStream normals(seed);
  return FgnSampler(params, n).draw(normals);
}

SamplePath sample_path(const HurstParams& params, std::size_t n, Seed seed) {
  return SamplePath::from_increments(sample_fgn(params, n, seed));
}

SamplePath sample_path_with_change(const ChangeSpec& spec, std::size_t n, Seed seed) {
  NormalStream normals(seed);
  return ChangeSampler(spec, n).draw(normals);
}

}  // namespace fbmcusum
