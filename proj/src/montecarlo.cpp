#include "fbmcusum/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <thread>

#include "fbmcusum/fgn.hpp"
#include "fbmcusum/ks.hpp"

namespace fbmcusum {

namespace {

const std::vector<double>& ks_percentile_quantiles() {
  static const std::vector<double> q = [] {
    std::vector<double> v;
    for (int p = 1; p <= 99; ++p) v.push_back(ks_quantile(p / 100.0));
    return v;
  }();
  return q;
}

}  // namespace

void McExperiment::validate() const {
  if (reps < 1) throw std::invalid_argument("an experiment needs at least one replication");
  if (scenario == Scenario::Power && !alt_spec) {
    throw std::invalid_argument("a power experiment needs an alternative");
  }
  null_params.validate();
  if (alt_spec) alt_spec->validate();
  for (double a : alpha_grid) {
    if (!(a > 0.0 && a < 1.0)) throw std::domain_error("test levels must lie in (0, 1)");
  }
}

double sorted_quantile(const std::vector<double>& sorted, double p) {
  if (sorted.empty()) throw std::invalid_argument("quantile of an empty sample");
  const double pos = p * static_cast<double>(sorted.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  return sorted[lo] + (pos - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}

McReport make_report(std::vector<double> statistics, const std::vector<double>& alpha_grid) {
  if (statistics.empty()) throw std::invalid_argument("report needs at least one statistic");
  McReport report;
  std::vector<double> sorted = statistics;
  std::sort(sorted.begin(), sorted.end());
  const double count = static_cast<double>(sorted.size());

  const auto& q = ks_percentile_quantiles();
  for (int p = 1; p <= 99; ++p) {
    const auto below = std::upper_bound(sorted.begin(), sorted.end(), q[p - 1]) - sorted.begin();
    report.percentiles.push_back(p);
    report.coverage.push_back(static_cast<double>(below) / count);
  }
  for (double alpha : alpha_grid) {
    const double crit = ks_quantile(1.0 - alpha);
    const auto above = sorted.end() - std::upper_bound(sorted.begin(), sorted.end(), crit);
    report.rejection_rate[alpha] = static_cast<double>(above) / count;
  }
  report.summary.mean = std::accumulate(sorted.begin(), sorted.end(), 0.0) / count;
  report.summary.min = sorted.front();
  report.summary.max = sorted.back();
  report.summary.q25 = sorted_quantile(sorted, 0.25);
  report.summary.median = sorted_quantile(sorted, 0.5);
  report.summary.q75 = sorted_quantile(sorted, 0.75);
  report.statistics = std::move(statistics);
  return report;
}

McReport run_experiment(const McExperiment& exp, unsigned parallelism) {
  exp.validate();
  if (parallelism < 1) throw std::invalid_argument("parallelism must be at least 1");

  std::optional<FgnSampler> null_sampler;
  std::optional<ChangeSampler> alt_sampler;
  if (exp.scenario == Scenario::Size) {
    null_sampler.emplace(exp.null_params, exp.n);
  } else {
    alt_sampler.emplace(*exp.alt_spec, exp.n);
  }

  std::vector<double> stats(exp.reps, 0.0);
  std::vector<std::size_t> argmax(exp.reps, 0);
  std::vector<char> degenerate(exp.reps, 0);

  auto worker = [&](std::size_t first, std::size_t stride) {
    for (std::size_t r = first; r < exp.reps; r += stride) {
      NormalStream normals(Seed::replication(exp.master_seed, r));
      const SamplePath path = null_sampler ? SamplePath::from_increments(null_sampler->draw(normals))
                                           : alt_sampler->draw(normals);
      try {
        const CusumResult res = cusum_statistic(path, exp.order, exp.lrv);
        stats[r] = res.statistic;
        argmax[r] = res.argmax_index;
      } catch (const DegenerateDataError&) {
        degenerate[r] = 1;
      }
    }
  };

  const std::size_t threads = std::min<std::size_t>(parallelism, exp.reps);
  if (threads == 1) {
    worker(0, 1);
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker, t, threads);
  }

  McReport report = make_report(std::move(stats), exp.alpha_grid);
  report.argmax_indices = std::move(argmax);
  report.degenerate = static_cast<std::size_t>(std::count(degenerate.begin(), degenerate.end(), 1));
  return report;
}

double ks_fit_distance(const McReport& report) {
  double worst = 0.0;
  for (std::size_t i = 0; i < report.percentiles.size(); ++i) {
    worst = std::max(worst, std::abs(report.coverage[i] - report.percentiles[i] / 100.0));
  }
  return worst;
}

std::vector<CurveRow> size_power_curves(const McReport& report) {
  if (report.statistics.empty()) throw std::invalid_argument("curves need a non-empty report");
  std::vector<CurveRow> rows;
  rows.reserve(report.percentiles.size());
  for (std::size_t i = 0; i < report.percentiles.size(); ++i) {
    const double pct = report.percentiles[i];
    rows.push_back({pct, 1.0 - pct / 100.0, report.coverage[i], report.coverage[i]});
  }
  return rows;
}

}  // namespace fbmcusum
