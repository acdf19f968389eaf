#include "fbmcusum/types.hpp"

#include <cmath>
#include <numeric>

namespace fbmcusum {

void HurstParams::validate() const {
  if (!(hurst > 0.0 && hurst < 1.0)) {
    throw std::domain_error("Hurst exponent must lie in (0, 1), got " + std::to_string(hurst));
  }
  if (!(sigma > 0.0) || !std::isfinite(sigma)) {
    throw std::domain_error("sigma must be positive and finite, got " + std::to_string(sigma));
  }
}

void ChangeSpec::validate() const {
  if (!(theta > 0.0 && theta < 1.0)) {
    throw std::domain_error("break time theta must lie in (0, 1), got " + std::to_string(theta));
  }
  pre.validate();
  post.validate();
}

std::size_t ChangeSpec::break_index(std::size_t n) const {
  return static_cast<std::size_t>(std::floor(static_cast<double>(n) * theta));
}

SamplePath SamplePath::from_levels(std::vector<double> levels) {
  if (levels.size() < 2) {
    throw std::length_error("a sample path needs at least two levels");
  }
  return SamplePath(std::move(levels));
}

SamplePath SamplePath::from_increments(std::span<const double> increments) {
  if (increments.empty()) {
    throw std::length_error("a sample path needs at least one increment");
  }
  std::vector<double> levels(increments.size() + 1, 0.0);
  std::partial_sum(increments.begin(), increments.end(), levels.begin() + 1);
  return SamplePath(std::move(levels));
}

SamplePath SamplePath::scaled(double c) const {
  std::vector<double> out(values_);
  for (double& v : out) v *= c;
  return SamplePath(std::move(out));
}

std::string to_string(Order order) { return order == Order::First ? "first" : "second"; }

std::string to_string(Glue glue) {
  return glue == Glue::IndependentPieces ? "independent-pieces" : "appended-increments";
}

}  // namespace fbmcusum
