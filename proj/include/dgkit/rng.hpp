#pragma once

#include <cstdint>

namespace dgkit {

/// SplitMix64. Deterministic across platforms; the only randomness source in
/// the project, so transcripts reproduce bit-for-bit from a seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform-ish value in [0, n); n must be positive.
  std::uint64_t below(std::uint64_t n) { return next() % n; }

  /// Signed value in [-amp, amp].
  long long signed_amp(long long amp) {
    return static_cast<long long>(below(2 * amp + 1)) - amp;
  }

  /// Derives an independent stream for a subtask.
  Rng fork(std::uint64_t salt) { return Rng(next() ^ (salt * 0x9e3779b97f4a7c15ull)); }

 private:
  std::uint64_t state_;
};

}  // namespace dgkit
