#include "fbmcusum/random.hpp"

#include <cmath>
#include <numbers>

namespace fbmcusum {

namespace {

constexpr std::uint64_t kMul0 = 0xD2E7470EE14C6C93ULL;
constexpr std::uint64_t kMul1 = 0xCA5A826395121157ULL;
constexpr std::uint64_t kWeyl0 = 0x9E3779B97F4A7C15ULL;
constexpr std::uint64_t kWeyl1 = 0xBB67AE8584CAA73BULL;

inline void mulhilo(std::uint64_t a, std::uint64_t b, std::uint64_t& hi, std::uint64_t& lo) {
  const unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
  hi = static_cast<std::uint64_t>(p >> 64);
  lo = static_cast<std::uint64_t>(p);
}

// 53 random bits, offset by half an ulp so the result is never 0 or 1.
inline double to_open_unit(std::uint64_t w) {
  return (static_cast<double>(w >> 11) + 0.5) * 0x1.0p-53;
}

}  // namespace

Philox4x64::Counter Philox4x64::block(Counter ctr, Key key) {
  for (int round = 0; round < 10; ++round) {
    if (round > 0) {
      key[0] += kWeyl0;
      key[1] += kWeyl1;
    }
    std::uint64_t hi0, lo0, hi1, lo1;
    mulhilo(kMul0, ctr[0], hi0, lo0);
    mulhilo(kMul1, ctr[2], hi1, lo1);
    ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
  }
  return ctr;
}

NormalStream::NormalStream(Seed seed) : key_{seed.key, seed.stream} {}

void NormalStream::refill_words() {
  words_ = Philox4x64::block({block_, 0, 0, 0}, key_);
  ++block_;
  word_pos_ = 0;
}

double NormalStream::next_uniform() {
  if (word_pos_ == 4) refill_words();
  return to_open_unit(words_[word_pos_++]);
}

void NormalStream::refill_normals() {
  for (int pair = 0; pair < 2; ++pair) {
    const double u1 = next_uniform();
    const double u2 = next_uniform();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    normals_[2 * pair] = radius * std::cos(angle);
    normals_[2 * pair + 1] = radius * std::sin(angle);
  }
  normal_pos_ = 0;
}

double NormalStream::next() {
  if (normal_pos_ == 4) refill_normals();
  return normals_[normal_pos_++];
}

void NormalStream::fill(std::span<double> out) {
  for (double& x : out) x = next();
}

}  // namespace fbmcusum
