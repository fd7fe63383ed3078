#pragma once

#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include "longtail/errors.hpp"

namespace longtail {

// ltrng v1 -- counter-based generator built on the splitmix64 finalizer.
//
// A stream is identified by a 64-bit key; output i of a stream is
// mix64(key + (i+1) * GOLDEN), which is the plain splitmix64 sequence
// seeded with the key. Child streams are derived by folding path elements
// into the key: key' = mix64(key ^ (element + GOLDEN)). The fold is order
// sensitive, so (seed, epoch, image) style paths give distinct streams.
//
// Integer draws (next_u64, next_below, shuffle) are exact and identical on
// every conforming platform. Floating-point draws that go through libm
// (normal, gamma, beta) are deterministic per build.
inline constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

inline constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Fixed stream tags. Part of the reproducibility contract: schedules and
// augmentation outputs are defined in terms of these substreams.
namespace stream {
inline constexpr std::uint64_t kUniform = 1;
inline constexpr std::uint64_t kClassAware = 2;
inline constexpr std::uint64_t kRepeatCoin = 3;
inline constexpr std::uint64_t kRepeatPerm = 4;
inline constexpr std::uint64_t kAugment = 5;
inline constexpr std::uint64_t kFixture = 6;
}  // namespace stream

class Rng {
 public:
  explicit Rng(std::uint64_t key) : state_(key) {}

  static Rng substream(std::uint64_t seed, std::initializer_list<std::uint64_t> path) {
    std::uint64_t key = seed;
    for (std::uint64_t e : path) key = mix64(key ^ (e + kGolden));
    return Rng(key);
  }

  std::uint64_t next_u64() {
    state_ += kGolden;
    return mix64(state_);
  }

  // Uniform in [0, 1) with 53-bit resolution.
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform in [0, n). Rejection keeps the draw exactly uniform.
  std::uint64_t next_below(std::uint64_t n) {
    if (n == 0) throw DomainError("next_below: n must be positive");
    const std::uint64_t threshold = (0 - n) % n;  // 2^64 mod n
    std::uint64_t u;
    do {
      u = next_u64();
    } while (u < threshold);
    return u % n;
  }

  bool next_bernoulli(double p) { return next_double() < p; }

  // Fisher-Yates, descending.
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      const auto j = static_cast<std::size_t>(next_below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

  // Box-Muller. Consumes exactly one pair of uniforms per call.
  double next_normal() {
    double u1;
    do {
      u1 = next_double();
    } while (u1 == 0.0);
    const double u2 = next_double();
    constexpr double kTwoPi = 6.283185307179586476925286766559;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(kTwoPi * u2);
  }

  // Marsaglia-Tsang squeeze for shape >= 1; shape < 1 via the boost
  // identity Gamma(a) = Gamma(a+1) * U^(1/a).
  double next_gamma(double alpha) {
    if (!(alpha > 0.0)) throw DomainError("next_gamma: alpha must be > 0");
    if (alpha < 1.0) {
      double u;
      do {
        u = next_double();
      } while (u == 0.0);
      return next_gamma(alpha + 1.0) * std::pow(u, 1.0 / alpha);
    }
    const double d = alpha - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
      double x, v;
      do {
        x = next_normal();
        v = 1.0 + c * x;
      } while (v <= 0.0);
      v = v * v * v;
      const double u = next_double();
      const double x2 = x * x;
      if (u < 1.0 - 0.0331 * x2 * x2) return d * v;
      if (u > 0.0 && std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) return d * v;
    }
  }

  // Symmetric Beta(alpha, alpha) as a ratio of two gamma draws.
  double next_beta(double alpha) {
    const double x = next_gamma(alpha);
    const double y = next_gamma(alpha);
    const double s = x + y;
    return s > 0.0 ? x / s : 0.5;
  }

 private:
  std::uint64_t state_;
};

}  // namespace longtail
