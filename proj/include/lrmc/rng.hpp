#pragma once

#include <cmath>
#include <cstdint>

namespace lrmc {

/// Counter-based PRNG. The k-th output is the SplitMix64 finalizer applied to
/// key + k*gamma, so the stream is a pure function of (seed, stream, k).
///
/// Stream splitting: substream(i) derives a fresh key from the parent key and
/// i; substreams are decorrelated from each other and from the parent's own
/// output sequence. Monte Carlo loops give each trial its own substream, which
/// makes every report reproducible and independent of scheduling order.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0)
      : key_(derive_key(mix64(seed + kGamma), stream)) {}

  CounterRng substream(std::uint64_t idx) const {
    CounterRng r(*this);
    r.key_ = derive_key(key_, idx);
    r.counter_ = 0;
    return r;
  }

  std::uint64_t next_u64() {
    std::uint64_t z = key_ + (++counter_) * kGamma;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0,1), 53 random bits.
  double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform double in (0,1]; safe as a log() argument.
  double uniform01_open_low() {
    return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
  }

  /// Standard normal via Box-Muller (one value per call; no cached spare, so
  /// the draw count is a pure function of the call count).
  double gaussian() {
    const double u1 = uniform01_open_low();
    const double u2 = uniform01();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586477 * u2);
  }

  /// Laplace (double-exponential) standardized to unit variance (scale 1/sqrt(2)).
  double laplace_unit() {
    const double u = uniform01_open_low();  // (0,1]
    const double b = 0.70710678118654752440;
    return u <= 0.5 ? b * std::log(2.0 * u) : -b * std::log(2.0 * (1.0 - u));
  }

  /// +1 or -1 with equal probability.
  double rademacher() { return (next_u64() >> 63) ? 1.0 : -1.0; }

  /// Uniform integer in [0, bound) by rejection-free scaling (bound << 2^64,
  /// bias is negligible for the index ranges used here).
  std::uint64_t below(std::uint64_t bound) { return next_u64() % bound; }

 private:
  static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ull;

  static std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  static std::uint64_t derive_key(std::uint64_t key, std::uint64_t stream) {
    return mix64(key ^ mix64((stream + 1) * 0xD1B54A32D192ED03ull));
  }

  std::uint64_t key_ = 0;
  std::uint64_t counter_ = 0;
};

}  // namespace lrmc
