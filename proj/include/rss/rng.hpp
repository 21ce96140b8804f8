// Deterministic random number generation for reproducible experiments.
//
// Every stochastic operation in the library takes an explicit 64-bit seed;
// there is no ambient randomness. Streams are split with derive_seed so that
// independent trials, rows, and workers never share state. The generators
// are fixed (splitmix64 seeding, xoshiro256++ core, Marsaglia polar method
// for Gaussians) so the same seed reproduces the same values bit for bit on
// any platform with IEEE-754 doubles.

#ifndef RSS_RNG_HPP
#define RSS_RNG_HPP

#include <array>
#include <cmath>
#include <cstdint>

namespace rss {

inline constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

// splitmix64 step (Vigna 2015). Advances state and returns the next word.
inline std::uint64_t splitmix64(std::uint64_t& state) noexcept {
  std::uint64_t z = (state += kGolden);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Splittable-stream seed derivation: injective in stream_id for a fixed
// master (the splitmix finalizer is a bijection), so distinct streams never
// collide.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream_id) noexcept {
  std::uint64_t s = master + (stream_id + 1) * kGolden;
  return splitmix64(s);
}

// xoshiro256++ (Blackman & Vigna 2018), seeded from splitmix64.
class Xoshiro256pp {
 public:
  explicit Xoshiro256pp(std::uint64_t seed) noexcept {
    std::uint64_t sm = seed;
    for (auto& w : state_) w = splitmix64(sm);
  }

  std::uint64_t next() noexcept {
    const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  // Uniform double in [0, 1), 53 random bits.
  double next_double() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Unbiased integer in [0, bound) by rejection.
  std::uint64_t next_below(std::uint64_t bound) noexcept {
    const std::uint64_t threshold = -bound % bound;
    for (;;) {
      const std::uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) noexcept { return (x << k) | (x >> (64 - k)); }
  std::array<std::uint64_t, 4> state_;
};

// Standard normal deviates via the Marsaglia polar method. Caches the paired
// deviate, so a sampler instance is a sequential stream; use one instance per
// logical stream.
class GaussianSampler {
 public:
  explicit GaussianSampler(std::uint64_t seed) noexcept : rng_(seed) {}

  double next() noexcept {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u, v, s;
    do {
      u = 2.0 * rng_.next_double() - 1.0;
      v = 2.0 * rng_.next_double() - 1.0;
      s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double mul = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * mul;
    has_spare_ = true;
    return u * mul;
  }

  double uniform() noexcept { return rng_.next_double(); }
  std::uint64_t bits() noexcept { return rng_.next(); }
  std::uint64_t below(std::uint64_t bound) noexcept { return rng_.next_below(bound); }

 private:
  Xoshiro256pp rng_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace rss

#endif  // RSS_RNG_HPP
