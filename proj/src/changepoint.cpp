#include "fbmcusum/changepoint.hpp"

#include <cmath>

namespace fbmcusum {

std::string to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::HurstIncrease:
      return "hurst-increase";
    case Verdict::HurstDecrease:
      return "hurst-decrease";
    case Verdict::VolatilityChange:
      return "volatility-change";
    case Verdict::Inconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

BreakEstimate estimate_break(const CusumResult& result) {
  if (result.trace.empty()) throw std::invalid_argument("break estimate needs a non-empty cusum trace");
  std::size_t index = 1;
  double best = std::abs(result.trace[0]);
  for (std::size_t m = 2; m <= result.trace.size(); ++m) {
    if (std::abs(result.trace[m - 1]) > best) {
      best = std::abs(result.trace[m - 1]);
      index = m;
    }
  }
  const std::size_t n = result.n == 0 ? result.trace.size() : result.n;
  return {static_cast<double>(index) / static_cast<double>(n), index, result.order};
}

double DiscriminationConfig::upper(std::size_t n) const {
  return std::pow(static_cast<double>(n), delta);
}

double DiscriminationConfig::lower(std::size_t n) const {
  return std::pow(static_cast<double>(n), -delta);
}

ChangeDiagnosis discriminate(const SamplePath& path, const BreakEstimate& brk,
                             const DiscriminationConfig& config) {
  const std::size_t n = path.n();
  ChangeDiagnosis out;
  if (brk.index < 1 || brk.index > n - 1) return out;

  const IncrementSeries inc = increments(path, Order::First);
  const double before = quad_var(inc, brk.index);
  double after = 0.0;
  for (std::size_t j = brk.index; j < n; ++j) after += inc.values[j] * inc.values[j];
  const double mean_before = before / static_cast<double>(brk.index);
  const double mean_after = after / static_cast<double>(n - brk.index);
  if (!(mean_after > 0.0)) {
    out.zero_denominator = true;
    return out;
  }
  out.q_ratio = mean_before / mean_after;
  if (out.q_ratio > config.upper(n)) {
    out.verdict = Verdict::HurstIncrease;
  } else if (out.q_ratio < config.lower(n)) {
    out.verdict = Verdict::HurstDecrease;
  } else {
    out.verdict = Verdict::VolatilityChange;
    out.sigma_ratio_estimate = out.q_ratio;
  }
  return out;
}

double BlockScan::non_rejection_fraction() const {
  if (tested == 0) return 0.0;
  return static_cast<double>(tested - rejected) / static_cast<double>(tested);
}

BlockScan block_scan(const SamplePath& series, std::size_t block_len, double alpha, Order order,
                     const LrvConfig& config) {
  if (block_len < 16) throw std::invalid_argument("block length must be at least 16");
  if (series.n() < block_len) throw std::length_error("series is shorter than one block");
  if (!(alpha > 0.0 && alpha < 1.0)) throw std::domain_error("test level must lie in (0, 1)");

  BlockScan scan;
  scan.alpha = alpha;
  const auto& z = series.values();
  for (std::size_t start = 0; start + block_len <= series.n(); start += block_len) {
    BlockResult block;
    block.start = start;
    block.length = block_len;
    std::vector<double> levels(z.begin() + static_cast<std::ptrdiff_t>(start),
                               z.begin() + static_cast<std::ptrdiff_t>(start + block_len + 1));
    const SamplePath piece = SamplePath::from_levels(std::move(levels));
    try {
      block.test = run_test(piece, alpha, order, config);
      ++scan.tested;
      if (block.test->rejects(alpha)) ++scan.rejected;
    } catch (const DegenerateDataError& e) {
      block.degenerate = true;
      block.error = e.what();
    }
    try {
      block.hurst = hurst_qv_ratio(piece);
    } catch (const DegenerateDataError& e) {
      block.degenerate = true;
      if (block.error.empty()) block.error = e.what();
    }
    scan.blocks.push_back(std::move(block));
  }
  return scan;
}

}  // namespace fbmcusum
