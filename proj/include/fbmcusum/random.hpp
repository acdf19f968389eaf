#pragma once

#include <array>
#include <cstdint>
#include <span>

namespace fbmcusum {

/// Philox4x64-10 counter-based bijection (Salmon et al., SC'11).
///
/// Output for a (counter, key) pair is a pure function, so replications keyed
/// by distinct stream ids never overlap and can be drawn in any order.
class Philox4x64 {
 public:
  using Counter = std::array<std::uint64_t, 4>;
  using Key = std::array<std::uint64_t, 2>;

  static Counter block(Counter counter, Key key);
};

/// A (seed, stream) pair identifying one independent random stream.
struct Seed {
  std::uint64_t key = 0;
  std::uint64_t stream = 0;

  /// The stream for replication `index` of an experiment seeded with `key`.
  static Seed replication(std::uint64_t key, std::uint64_t index) { return Seed{key, index}; }

  friend bool operator==(const Seed&, const Seed&) = default;
};

/// Standard normal variates from a Philox stream via Box-Muller.
///
/// Each Philox block yields four 64-bit words, i.e. two Box-Muller pairs.
class NormalStream {
 public:
  explicit NormalStream(Seed seed);

  double next();
  void fill(std::span<double> out);

  /// Uniform on the open interval (0, 1).
  double next_uniform();

 private:
  void refill_words();
  void refill_normals();

  Philox4x64::Key key_;
  std::uint64_t block_ = 0;
  std::array<std::uint64_t, 4> words_{};
  int word_pos_ = 4;
  std::array<double, 4> normals_{};
  int normal_pos_ = 4;
};

}  // namespace fbmcusum
