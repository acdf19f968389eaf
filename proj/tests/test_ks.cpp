#include <doctest.h>

#include <cmath>

#include "fbmcusum/ks.hpp"
#include "oracles.hpp"

using namespace fbmcusum;

TEST_CASE("cdf endpoints") {
  CHECK(ks_cdf(0.0) == 0.0);
  CHECK(ks_cdf(-1.0) == 0.0);
  CHECK(std::abs(ks_cdf(10.0) - 1.0) <= 1e-12);
  CHECK(std::abs(ks_cdf(1e6) - 1.0) <= 1e-12);
  CHECK(ks_cdf(0.05) >= 0.0);
  CHECK(ks_cdf(0.05) < 1e-12);
}

TEST_CASE("cdf agrees with the alternating series") {
  for (double x = 0.3; x <= 3.0; x += 0.05) {
    CAPTURE(x);
    CHECK(std::abs(ks_cdf(x) - oracle::ks_cdf_series(x)) <= 1e-12);
  }
  CHECK(ks_cdf(1.3581) == doctest::Approx(0.95).epsilon(1e-4));
}

TEST_CASE("cdf is nondecreasing and continuous across the branch point") {
  double prev = 0.0;
  for (double x = 0.01; x <= 4.0; x += 0.001) {
    const double c = ks_cdf(x);
    CHECK(c >= prev);
    prev = c;
  }
  CHECK(std::abs(ks_cdf(std::nextafter(1.0, 0.0)) - ks_cdf(1.0)) <= 1e-14);
}

TEST_CASE("survival is the complement") {
  for (double x : {0.4, 1.0, 1.358, 2.5}) CHECK(ks_survival(x) == doctest::Approx(1.0 - ks_cdf(x)).epsilon(1e-12));
  // Far tail stays accurate where 1 - cdf would cancel.
  CHECK(ks_survival(5.0) == doctest::Approx(2.0 * std::exp(-50.0)).epsilon(1e-10));
}

TEST_CASE("quantiles") {
  CHECK(ks_quantile(0.90) == doctest::Approx(1.2238).epsilon(1e-4));
  CHECK(ks_quantile(0.95) == doctest::Approx(1.3581).epsilon(1e-4));
  CHECK(ks_quantile(0.99) == doctest::Approx(1.6276).epsilon(1e-4));
  for (double p : {0.90, 0.95, 0.99}) CHECK(std::abs(ks_quantile(p) - oracle::ks_quantile_series(p)) <= 1e-8);
}

TEST_CASE("quantile inverts the cdf") {
  for (double p : {0.01, 0.1, 0.5, 0.9, 0.95, 0.99, 0.999}) {
    CAPTURE(p);
    CHECK(std::abs(ks_cdf(ks_quantile(p)) - p) <= 1e-8);
  }
}

TEST_CASE("quantile domain") {
  CHECK_THROWS_AS(ks_quantile(0.0), std::domain_error);
  CHECK_THROWS_AS(ks_quantile(1.0), std::domain_error);
  CHECK_THROWS_AS(ks_quantile(std::nan("")), std::domain_error);
}
