#include <doctest.h>

#include <cmath>
#include <numbers>

#include "fbmcusum/fgn.hpp"
#include "fbmcusum/gamma.hpp"
#include "oracles.hpp"

using namespace fbmcusum;

TEST_CASE("independent increments give exactly one") {
  const GammaSeries g = gamma_series(0.5, 1e-10);
  CHECK(g.value == 1.0);
  CHECK(g.hurst == 0.5);
}

TEST_CASE("series against brute-force summation to 1e7 lags") {
  const GammaSeries g2 = gamma_series(0.2, 1e-8);
  CHECK(std::abs(g2.value - oracle::gamma_brute_force(0.2, 10'000'000, false)) <= 1e-8);
  CHECK(g2.tail_bound <= 1e-8);

  // At H = 0.7 the remainder beyond 1e7 lags is about 3e-3; the raw brute force
  // is only good to that, the tail-corrected one to far better.
  const GammaSeries g7 = gamma_series(0.7, 1e-8);
  CHECK(std::abs(g7.value - oracle::gamma_brute_force(0.7, 10'000'000, true)) <= 1e-6);
  CHECK(g7.value > oracle::gamma_brute_force(0.7, 10'000'000, false));
}

TEST_CASE("series is at least one and finite below 3/4") {
  for (double h : {0.01, 0.1, 0.25, 0.4, 0.55, 0.65, 0.74}) {
    const GammaSeries g = gamma_series(h);
    CAPTURE(h);
    CHECK(g.value >= 1.0);
    CHECK(std::isfinite(g.value));
    CHECK(g.tail_bound <= 1e-12);
  }
}

TEST_CASE("explicit part matches the autocorrelation sum") {
  const GammaSeries g = gamma_series(0.3, 1e-12);
  double direct = 1.0;
  for (std::size_t r = 1; r <= 200000; ++r) direct += 2.0 * std::pow(fgn_autocorrelation(0.3, r), 2);
  CHECK(g.value == doctest::Approx(direct).epsilon(1e-9));
}

TEST_CASE("domain") {
  CHECK_THROWS_AS(gamma_series(0.75), std::domain_error);
  CHECK_THROWS_AS(gamma_series(0.9), std::domain_error);
  CHECK_THROWS_AS(gamma_series(0.0), std::domain_error);
  CHECK_THROWS_AS(gamma_series(0.3, 0.0), std::domain_error);
}

TEST_CASE("Hurwitz zeta") {
  CHECK(hurwitz_zeta(2.0, 1.0) == doctest::Approx(std::numbers::pi * std::numbers::pi / 6).epsilon(1e-14));
  CHECK(hurwitz_zeta(4.0, 1.0) == doctest::Approx(std::pow(std::numbers::pi, 4) / 90).epsilon(1e-14));
  // zeta(s, a) - zeta(s, a + 1) = a^{-s}
  for (double s : {1.1, 1.6, 2.7}) {
    for (double a : {1.0, 3.5, 40.0}) {
      CHECK(hurwitz_zeta(s, a) - hurwitz_zeta(s, a + 1) == doctest::Approx(std::pow(a, -s)).epsilon(1e-10));
    }
  }
  CHECK_THROWS_AS(hurwitz_zeta(1.0, 1.0), std::domain_error);
}
