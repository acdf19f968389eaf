#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "fbmcusum/cusum.hpp"
#include "fbmcusum/types.hpp"

namespace fbmcusum {

inline constexpr std::size_t kDefaultReps = 2000;
inline constexpr std::size_t kFullScaleReps = 10000;

enum class Scenario { Size, Power };

struct McExperiment {
  Scenario scenario = Scenario::Size;
  HurstParams null_params{0.2, 2.0};
  std::optional<ChangeSpec> alt_spec;  // required for Scenario::Power
  std::size_t n = 100;
  std::size_t reps = kDefaultReps;
  Order order = Order::First;
  LrvConfig lrv;
  std::vector<double> alpha_grid{0.10, 0.05, 0.01};
  std::uint64_t master_seed = 1;

  void validate() const;
};

struct McSummary {
  double mean = 0.0;
  double min = 0.0;
  double q25 = 0.0;
  double median = 0.0;
  double q75 = 0.0;
  double max = 0.0;
};

struct McReport {
  std::vector<double> statistics;  // one per replication, 0 for degenerate ones
  std::vector<std::size_t> argmax_indices;
  std::vector<double> percentiles;  // 1, 2, ..., 99
  std::vector<double> coverage;     // share of statistics <= KS quantile at each percentile
  std::map<double, double> rejection_rate;
  McSummary summary;
  std::size_t degenerate = 0;
};

/// Builds the coverage, rejection and summary fields from raw statistics.
McReport make_report(std::vector<double> statistics, const std::vector<double>& alpha_grid);

/// Replication r draws its path from Seed{master_seed, r}; the report does not
/// depend on `parallelism`. Degenerate replications count as non-rejections.
McReport run_experiment(const McExperiment& exp, unsigned parallelism = 1);

/// Largest |coverage - percentile/100| over the percentile grid.
double ks_fit_distance(const McReport& report);

struct CurveRow {
  double percentile = 0.0;  // 100 (1 - alpha)
  double level = 0.0;       // alpha
  double coverage = 0.0;
  double type_ii_error = 0.0;  // P(T <= q_{1-alpha}); equals coverage, read under an alternative
};

std::vector<CurveRow> size_power_curves(const McReport& report);

/// Linear-interpolation sample quantile of sorted data, p in [0, 1].
double sorted_quantile(const std::vector<double>& sorted, double p);

}  // namespace fbmcusum
