#include <doctest.h>

#include <cmath>
#include <vector>

#include "fbmcusum/estimators.hpp"
#include "fbmcusum/fgn.hpp"

using namespace fbmcusum;

namespace {

// A path whose first-order increments all have the same square q / n, so the
// quadratic variation is exactly q (up to rounding of the cumulation).
SamplePath path_with_qv(std::size_t n, double qv) {
  std::vector<double> inc(n);
  const double a = std::sqrt(qv / static_cast<double>(n));
  for (std::size_t j = 0; j < n; ++j) inc[j] = (j % 2 == 0) ? a : -a;
  return SamplePath::from_increments(inc);
}

SamplePath path_from_increments(const std::vector<double>& inc) { return SamplePath::from_increments(inc); }

}  // namespace

TEST_CASE("first and second order increments") {
  const SamplePath path = SamplePath::from_levels({0, 1, 4, 9});
  const IncrementSeries first = increments(path, Order::First);
  CHECK(first.values == std::vector<double>{1, 3, 5});
  CHECK(first.delta == doctest::Approx(1.0 / 3.0));
  const IncrementSeries second = increments(path, Order::Second);
  CHECK(second.values == std::vector<double>{2, 2});
  CHECK(second.size() == 2);

  const SamplePath flat = SamplePath::from_levels({3, 3, 3, 3, 3});
  for (double v : increments(flat, Order::First).values) CHECK(v == 0.0);
  for (double v : increments(flat, Order::Second).values) CHECK(v == 0.0);

  CHECK_THROWS_AS(increments(SamplePath::from_levels({0, 1}), Order::First), std::length_error);
}

TEST_CASE("second differences are differences of first differences") {
  const SamplePath path = sample_path({0.3, 1.0}, 64, Seed{1, 1});
  const auto d1 = increments(path, Order::First).values;
  const auto d2 = increments(path, Order::Second).values;
  REQUIRE(d2.size() == d1.size() - 1);
  for (std::size_t j = 0; j < d2.size(); ++j) {
    CHECK(d2[j] == doctest::Approx(d1[j + 1] - d1[j]).epsilon(1e-12));
  }
}

TEST_CASE("quadratic variation") {
  CHECK(quad_var({Order::First, {1, 1, 1}, 1.0 / 3}) == 3.0);
  CHECK(quad_var({Order::First, {1, 3, 5}, 1.0 / 3}, 2) == 10.0);
  CHECK(quad_var({Order::First, {0, 0, 0}, 1.0 / 3}) == 0.0);
  CHECK_THROWS_AS(quad_var({Order::First, {1, 3, 5}, 1.0 / 3}, 0), std::out_of_range);
  CHECK_THROWS_AS(quad_var({Order::First, {1, 3, 5}, 1.0 / 3}, 4), std::out_of_range);
  const IncrementSeries inc{Order::First, {0.5, -2, 0, 1.5}, 0.25};
  for (std::size_t m = 1; m < 4; ++m) CHECK(quad_var(inc, m) <= quad_var(inc, m + 1));
}

TEST_CASE("known-sigma estimator inverts the power law") {
  CHECK(hurst_known_sigma(path_with_qv(50, 1.0)).hurst == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(hurst_known_sigma(path_with_qv(100, std::pow(100.0, 1.0 - 0.6))).hurst ==
        doctest::Approx(0.3).epsilon(1e-12));
  CHECK(hurst_known_sigma(path_with_qv(100, 1.0)).method == HurstMethod::KnownSigma);
  CHECK_THROWS_AS(hurst_known_sigma(SamplePath::from_levels({1, 1, 1})), DegenerateDataError);
}

TEST_CASE("ratio estimator at exact ratios") {
  // Increments (1, 0.5, 0): one-step QV 1.25, two-step QV 1.5^2 + 0.5^2 = 2.5, ratio 2.
  const HurstEstimate half = hurst_qv_ratio(SamplePath::from_levels({0, 1, 1.5, 1.5}));
  CHECK(half.hurst == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(half.method == HurstMethod::QvRatio);
  CHECK(half.n == 3);
  // Increments (1, 1, 1, 1): one-step QV 4, two-step QV 3 * 4 = 12, ratio 3.
  CHECK(hurst_qv_ratio(path_from_increments({1, 1, 1, 1})).hurst ==
        doctest::Approx(std::log(3.0) / (2 * std::log(2.0))).epsilon(1e-14));
}

TEST_CASE("ratio estimator outside (0, 1) is reported, not clamped") {
  // Increments (1, 0, 0, 1): one-step QV 2, two-step QV 1 + 0 + 1 = 2, ratio 1.
  const HurstEstimate zero = hurst_qv_ratio(path_from_increments({1, 0, 0, 1}));
  CHECK(std::abs(zero.hurst) < 1e-15);
  CHECK_FALSE(zero.in_range());
  // Linear path: ratio 4 (n - 1) / n tends to the boundary value 4, i.e. H -> 1.
  const HurstEstimate line = hurst_qv_ratio(path_from_increments(std::vector<double>(1000, 1.0)));
  CHECK(line.hurst == doctest::Approx(0.5 * std::log2(4.0 * 999.0 / 1000.0)).epsilon(1e-14));
  CHECK_FALSE(HurstEstimate{1.0, HurstMethod::QvRatio, 10}.in_range());
}

TEST_CASE("ratio estimator degeneracies") {
  CHECK_THROWS_AS(hurst_qv_ratio(SamplePath::from_levels({2, 2, 2, 2})), DegenerateDataError);
  // Zero two-step QV: increments (1, -1, 1, -1).
  CHECK_THROWS_AS(hurst_qv_ratio(path_from_increments({1, -1, 1, -1})), DegenerateDataError);
  CHECK_THROWS_AS(hurst_qv_ratio(SamplePath::from_levels({0, 1, 3})), std::domain_error);
  // Isolated zero increments are fine.
  CHECK_NOTHROW(hurst_qv_ratio(path_from_increments({0.5, 0, 0, -1, 0, 2})));
}

TEST_CASE("volatility plug-in") {
  const double h = 0.3;
  const std::size_t n = 100;
  const double base = std::pow(static_cast<double>(n), 1.0 - 2 * h);
  CHECK(sigma_plugin(path_with_qv(n, base), h) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(sigma_plugin(path_with_qv(n, 4.0 * base), h) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK_THROWS_AS(sigma_plugin(path_with_qv(n, base), 0.0), std::domain_error);
  CHECK_THROWS_AS(sigma_plugin(path_with_qv(n, base), 1.0), std::domain_error);
}

TEST_CASE("scale behaviour") {
  const SamplePath path = sample_path({0.35, 1.3}, 500, Seed{3, 0});
  for (double c : {0.25, 2.0, 8.0}) {
    const SamplePath scaled = path.scaled(c);
    CAPTURE(c);
    CHECK(hurst_qv_ratio(scaled).hurst == hurst_qv_ratio(path).hurst);
    CHECK(sigma_plugin(scaled, 0.35) == c * sigma_plugin(path, 0.35));
    const double shift = -std::log(c * c) / (2.0 * std::log(500.0));
    CHECK(hurst_known_sigma(scaled).hurst - hurst_known_sigma(path).hurst == doctest::Approx(shift).epsilon(1e-12));
  }
  // A non-dyadic factor is equal up to rounding.
  CHECK(hurst_qv_ratio(path.scaled(3.7)).hurst == doctest::Approx(hurst_qv_ratio(path).hurst).epsilon(1e-13));
}

namespace {

struct McStats {
  double mean = 0.0;
  double rmse = 0.0;
};

template <class Fn>
McStats simulate(double h, double sigma, std::size_t n, int reps, std::uint64_t seed, Fn&& estimate) {
  const FgnSampler sampler({h, sigma}, n);
  double sum = 0.0, ss = 0.0;
  for (int r = 0; r < reps; ++r) {
    NormalStream normals(Seed::replication(seed, r));
    const SamplePath path = SamplePath::from_increments(sampler.draw(normals));
    const double v = estimate(path);
    sum += v;
    ss += (v - h) * (v - h);
  }
  return {sum / reps, std::sqrt(ss / reps)};
}

}  // namespace

TEST_CASE("known-sigma estimator is unbiased at desk scale") {
  const McStats s = simulate(0.2, 1.0, 1000, 500, 101, [](const SamplePath& p) { return hurst_known_sigma(p).hurst; });
  CHECK(std::abs(s.mean - 0.2) <= 0.02);
}

TEST_CASE("ratio estimator recovers H = 0.469") {
  const McStats s = simulate(0.469, 1.0, 4096, 200, 102, [](const SamplePath& p) { return hurst_qv_ratio(p).hurst; });
  CHECK(std::abs(s.mean - 0.469) <= 0.02);
}

TEST_CASE("plug-in volatility with estimated H") {
  const FgnSampler sampler({0.2, 2.0}, 1000);
  double sum = 0.0;
  constexpr int reps = 500;
  for (int r = 0; r < reps; ++r) {
    NormalStream normals(Seed::replication(103, r));
    const SamplePath path = SamplePath::from_increments(sampler.draw(normals));
    sum += sigma_plugin(path, hurst_qv_ratio(path).hurst);
  }
  CHECK(std::abs(sum / reps - 2.0) <= 0.2);
}

TEST_CASE("RMSE shrinks by about 1/sqrt(2) per doubling of n") {
  constexpr int reps = 400;
  auto qv = [](const SamplePath& p) { return hurst_qv_ratio(p).hurst; };
  auto ks = [](const SamplePath& p) { return hurst_known_sigma(p).hurst; };
  for (double h : {0.2, 0.6}) {
    const double q256 = simulate(h, 1.0, 256, reps, 111, qv).rmse;
    const double q512 = simulate(h, 1.0, 512, reps, 112, qv).rmse;
    const double q1024 = simulate(h, 1.0, 1024, reps, 113, qv).rmse;
    const double k256 = simulate(h, 1.0, 256, reps, 114, ks).rmse;
    const double k512 = simulate(h, 1.0, 512, reps, 115, ks).rmse;
    const double k1024 = simulate(h, 1.0, 1024, reps, 116, ks).rmse;
    const double lo = 0.75 / std::sqrt(2.0), hi = 1.25 / std::sqrt(2.0);
    CAPTURE(h);
    for (double ratio : {q512 / q256, q1024 / q512, k512 / k256, k1024 / k512}) {
      CAPTURE(ratio);
      CHECK(ratio >= lo);
      CHECK(ratio <= hi);
    }
  }
}
