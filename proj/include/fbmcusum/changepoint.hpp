#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "fbmcusum/cusum.hpp"
#include "fbmcusum/estimators.hpp"
#include "fbmcusum/types.hpp"

namespace fbmcusum {

/// theta-hat = index / n, index the smallest argmax of |S_m|.
struct BreakEstimate {
  double theta_hat = 0.0;
  std::size_t index = 0;
  Order order = Order::First;
};

BreakEstimate estimate_break(const CusumResult& result);

enum class Verdict { HurstIncrease, HurstDecrease, VolatilityChange, Inconclusive };

std::string to_string(Verdict verdict);

/// Thresholds tau_hi(n) = n^delta and tau_lo(n) = n^{-delta} on the ratio of
/// mean squared increments before and after the break.
struct DiscriminationConfig {
  double delta = 0.3;

  double upper(std::size_t n) const;
  double lower(std::size_t n) const;
};

struct ChangeDiagnosis {
  double q_ratio = 0.0;
  Verdict verdict = Verdict::Inconclusive;
  std::optional<double> sigma_ratio_estimate;  // sigma^2 / sigma-tilde^2 for a volatility change
  bool zero_denominator = false;
};

/// Ratio Q of mean squared first-order increments up to the break index to
/// the mean over the remaining increments, classified against the thresholds.
/// A break index outside 1..n-1 gives Q = 0 and an inconclusive verdict.
ChangeDiagnosis discriminate(const SamplePath& path, const BreakEstimate& brk,
                             const DiscriminationConfig& config = {});

struct BlockResult {
  std::size_t start = 0;   // index of the first level of the block
  std::size_t length = 0;  // increments in the block
  std::optional<CusumResult> test;
  std::optional<HurstEstimate> hurst;
  bool degenerate = false;
  std::string error;
};

struct BlockScan {
  std::vector<BlockResult> blocks;
  double alpha = 0.05;
  std::size_t rejected = 0;
  std::size_t tested = 0;

  /// Share of non-degenerate blocks where the test did not reject.
  double non_rejection_fraction() const;
};

/// Runs the test and the ratio estimator on disjoint consecutive blocks of
/// `block_len` increments. A trailing remainder shorter than block_len is dropped.
/// Degenerate blocks are flagged and the scan continues.
BlockScan block_scan(const SamplePath& series, std::size_t block_len, double alpha, Order order,
                     const LrvConfig& config = {});

}  // namespace fbmcusum
