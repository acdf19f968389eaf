#include <doctest.h>

#include <cmath>
#include <vector>

#include "fbmcusum/random.hpp"

using namespace fbmcusum;

TEST_CASE("philox block matches reference words") {
  // Words produced by numpy.random.Philox for the same key and counter.
  const auto zero = Philox4x64::block({1, 0, 0, 0}, {0, 0});
  CHECK(zero[0] == 0x02f4ba6408e4d89bULL);
  CHECK(zero[1] == 0x3dd62b0b9ca8c5b2ULL);
  CHECK(zero[2] == 0x1c8667a55d902e79ULL);
  CHECK(zero[3] == 0x907d7a052fd5b4dcULL);

  const auto keyed = Philox4x64::block({8, 0, 0, 0}, {123, 456});
  CHECK(keyed[0] == 0x5de0860243093b6fULL);
  CHECK(keyed[1] == 0x8d48aad7b5fef750ULL);
  CHECK(keyed[2] == 0xaa1993e111dcd24bULL);
  CHECK(keyed[3] == 0x61b4c400632b29b8ULL);
}

TEST_CASE("normal stream is a pure function of the seed") {
  NormalStream a(Seed{42, 7});
  NormalStream b(Seed{42, 7});
  NormalStream c(Seed{42, 8});
  bool differs = false;
  for (int i = 0; i < 1000; ++i) {
    const double x = a.next();
    CHECK(x == b.next());
    differs = differs || x != c.next();
  }
  CHECK(differs);
}

TEST_CASE("fill continues the same sequence as next") {
  NormalStream a(Seed{3, 1});
  NormalStream b(Seed{3, 1});
  std::vector<double> buf(37);
  a.fill(buf);
  for (double x : buf) CHECK(x == b.next());
}

TEST_CASE("replication seeds are distinct streams") {
  CHECK(Seed::replication(5, 0) == Seed{5, 0});
  CHECK_FALSE(Seed::replication(5, 0) == Seed::replication(5, 1));
}

TEST_CASE("standard normal moments") {
  NormalStream s(Seed{2024, 0});
  constexpr int kDraws = 200000;
  double m1 = 0, m2 = 0, m4 = 0;
  for (int i = 0; i < kDraws; ++i) {
    const double x = s.next();
    m1 += x;
    m2 += x * x;
    m4 += x * x * x * x;
  }
  m1 /= kDraws;
  m2 /= kDraws;
  m4 /= kDraws;
  CHECK(std::abs(m1) < 4.0 / std::sqrt(kDraws));
  CHECK(std::abs(m2 - 1.0) < 4.0 * std::sqrt(2.0 / kDraws));
  CHECK(std::abs(m4 - 3.0) < 4.0 * std::sqrt(96.0 / kDraws));
}

TEST_CASE("uniforms lie strictly inside the unit interval") {
  NormalStream s(Seed{9, 9});
  double lo = 1.0, hi = 0.0, sum = 0.0;
  constexpr int kDraws = 100000;
  for (int i = 0; i < kDraws; ++i) {
    const double u = s.next_uniform();
    lo = std::min(lo, u);
    hi = std::max(hi, u);
    sum += u;
  }
  CHECK(lo > 0.0);
  CHECK(hi < 1.0);
  CHECK(std::abs(sum / kDraws - 0.5) < 4.0 * std::sqrt(1.0 / 12.0 / kDraws));
}

TEST_CASE("successive normals are uncorrelated") {
  NormalStream s(Seed{11, 0});
  constexpr int kDraws = 100000;
  double prev = s.next(), acc = 0.0;
  for (int i = 0; i < kDraws; ++i) {
    const double x = s.next();
    acc += x * prev;
    prev = x;
  }
  CHECK(std::abs(acc / kDraws) < 4.0 / std::sqrt(kDraws));
}
