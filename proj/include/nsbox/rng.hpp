#pragma once

#include <cstdint>

namespace nsbox {

// SplitMix64 finalizer. Serves both as the per-draw output function and as
// the key-derivation hash, so random streams are addressed by stable ids
// (seed, trial, box) instead of by the order in which code happens to ask.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

// Child key for a labelled slot under a parent key. Not symmetric in its
// arguments; distinct (parent, index) pairs give independent-looking keys.
constexpr std::uint64_t derive_key(std::uint64_t parent, std::uint64_t index) noexcept {
  return mix64(parent ^ (mix64(index) + 0x9e3779b97f4a7c15ull + (parent << 6) + (parent >> 2)));
}

// Counter-based stream: draw i is a pure function of (key, i). Replay of a
// stream never depends on what other streams consumed, so interleaving
// parties or trials in any order reproduces the same per-stream values.
class CounterRng {
 public:
  explicit constexpr CounterRng(std::uint64_t key) noexcept : key_(key) {}

  constexpr std::uint64_t next_u64() noexcept {
    return mix64(key_ + 0x9e3779b97f4a7c15ull * ++counter_);
  }

  // Uniform in [0, 1), 53 significant bits.
  double next_unit() noexcept {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  bool next_bernoulli(double p) noexcept { return next_unit() < p; }

  int next_bit() noexcept { return static_cast<int>(next_u64() >> 63); }

  // Uniform in [0, n) via the multiply-shift reduction; bias is O(n / 2^64).
  std::uint64_t next_below(std::uint64_t n) noexcept {
    using u128 = unsigned __int128;
    return static_cast<std::uint64_t>((static_cast<u128>(next_u64()) * n) >> 64);
  }

  constexpr std::uint64_t key() const noexcept { return key_; }
  constexpr std::uint64_t draws() const noexcept { return counter_; }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace nsbox
