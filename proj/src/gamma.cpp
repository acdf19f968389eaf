#include "fbmcusum/gamma.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "fbmcusum/fgn.hpp"

namespace fbmcusum {

namespace {

constexpr int kExpansionTerms = 8;  // m = 2 .. kExpansionTerms + 1
constexpr std::size_t kMinLag = 32;
constexpr std::size_t kMaxLag = std::size_t{1} << 20;

// B_{2j} / (2j)!
constexpr std::array<double, 8> kBernoulliOverFactorial = {
    1.0 / 12.0,       -1.0 / 720.0,
    1.0 / 30240.0,    -1.0 / 1209600.0,
    1.0 / 47900160.0, -691.0 / 1307674368000.0,
    1.0 / 74724249600.0, -3617.0 / 10670622842880000.0};

// Generalized binomial coefficient C(alpha, j).
double binomial(double alpha, int j) {
  double c = 1.0;
  for (int i = 0; i < j; ++i) c *= (alpha - i) / (i + 1);
  return c;
}

}  // namespace

double hurwitz_zeta(double s, double a) {
  if (!(s > 1.0) || !(a >= 1.0)) throw std::domain_error("hurwitz_zeta needs s > 1 and a >= 1");
  // Shift the argument before the Euler-Maclaurin tail so its terms shrink fast.
  constexpr int kShift = 10;
  double sum = 0.0;
  for (int k = 0; k < kShift; ++k) sum += std::pow(a + k, -s);
  const double b = a + kShift;
  sum += std::pow(b, 1.0 - s) / (s - 1.0) + 0.5 * std::pow(b, -s);
  double rising = s;  // s (s+1) ... (s + 2j - 2)
  double power = std::pow(b, -s - 1.0);
  for (std::size_t j = 0; j < kBernoulliOverFactorial.size(); ++j) {
    sum += kBernoulliOverFactorial[j] * rising * power;
    rising *= (s + 2.0 * j + 1.0) * (s + 2.0 * j + 2.0);
    power /= b * b;
  }
  return sum;
}

GammaSeries gamma_series(double hurst, double tol) {
  if (!(hurst > 0.0 && hurst < 0.75)) {
    throw std::domain_error("gamma series diverges unless 0 < H < 3/4, got H=" + std::to_string(hurst));
  }
  if (!(tol > 0.0)) throw std::domain_error("gamma series tolerance must be positive");

  // rho(r) = sum_{k>=1} c_k r^{2H-2k} with c_k = C(2H, 2k); squaring gives
  // rho(r)^2 = sum_{m>=2} a_m r^{4H-2m}, a_m = sum_{k=1}^{m-1} c_k c_{m-k}.
  const double two_h = 2.0 * hurst;
  std::vector<double> c(kExpansionTerms + 1, 0.0);
  for (int k = 1; k <= kExpansionTerms; ++k) c[k] = binomial(two_h, 2 * k);
  std::vector<double> a(kExpansionTerms + 2, 0.0);
  for (int m = 2; m <= kExpansionTerms + 1; ++m) {
    for (int k = 1; k <= m - 1; ++k) a[m] += c[k] * c[m - k];
  }
  // sum_j |C(2H, j)| over j >= 1 is at most 2 for 2H < 2, hence |a_m| <= 4.
  constexpr double kCoefficientBound = 4.0;
  const int next_m = kExpansionTerms + 2;

  double explicit_sum = 0.0;
  std::size_t r = 0;
  std::size_t lag = kMinLag;
  for (;;) {
    for (; r < lag; ++r) {
      const double rho = fgn_autocorrelation(hurst, r + 1);
      explicit_sum += rho * rho;
    }
    const double R = static_cast<double>(lag);
    const double exponent = 1.0 + 4.0 * hurst - 2.0 * next_m;
    const double remainder =
        2.0 * kCoefficientBound * std::pow(R, exponent) / (-exponent) / (1.0 - 1.0 / (R * R));
    if (remainder <= tol || lag >= kMaxLag) {
      double tail = 0.0;
      for (int m = 2; m <= kExpansionTerms + 1; ++m) {
        if (a[m] != 0.0) tail += a[m] * hurwitz_zeta(2.0 * m - 4.0 * hurst, R + 1.0);
      }
      return GammaSeries{hurst, 1.0 + 2.0 * (explicit_sum + tail), lag, remainder};
    }
    lag *= 2;
  }
}

}  // namespace fbmcusum
