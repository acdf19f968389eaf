#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace fbmcusum {

/// Raised when data carry no information for the requested quantity, e.g. an
/// all-zero quadratic variation or a vanishing long-run variance.
class DegenerateDataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a covariance matrix fails to factor.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Hurst exponent and scale of B_sigma^H = sigma * B^H.
struct HurstParams {
  double hurst = 0.5;
  double sigma = 1.0;

  /// Throws std::domain_error unless 0 < hurst < 1 and sigma > 0.
  void validate() const;

  friend bool operator==(const HurstParams&, const HurstParams&) = default;
};

/// How the post-break increments relate to the pre-break block.
enum class Glue {
  IndependentPieces,   // two independent fGn blocks
  AppendedIncrements,  // post block drawn from the post regime conditional on the pre block
};

/// A single change of regime at time theta in (0, 1).
struct ChangeSpec {
  double theta = 0.5;
  HurstParams pre;
  HurstParams post;
  Glue glue = Glue::IndependentPieces;

  void validate() const;

  /// floor(n * theta): number of increments drawn under the pre regime.
  std::size_t break_index(std::size_t n) const;
};

/// Observed levels Z_0, ..., Z_n on the grid j / n of [0, 1].
class SamplePath {
 public:
  SamplePath() = default;

  /// Requires at least two levels.
  static SamplePath from_levels(std::vector<double> levels);

  /// Cumulates increments with Z_0 = 0.
  static SamplePath from_increments(std::span<const double> increments);

  std::size_t n() const { return values_.size() - 1; }
  double delta() const { return 1.0 / static_cast<double>(n()); }
  const std::vector<double>& values() const { return values_; }
  double operator[](std::size_t j) const { return values_[j]; }

  /// Copy of the path with every level multiplied by c.
  SamplePath scaled(double c) const;

 private:
  explicit SamplePath(std::vector<double> levels) : values_(std::move(levels)) {}

  std::vector<double> values_{0.0, 0.0};
};

/// Increment order used by the cusum statistics.
enum class Order { First = 1, Second = 2 };

std::string to_string(Order order);
std::string to_string(Glue glue);

}  // namespace fbmcusum
