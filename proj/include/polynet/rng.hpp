#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <string_view>

#include "polynet/rational.hpp"

namespace polynet {

// Seeded random streams with hand-rolled distributions, so results are
// byte-reproducible and independent of libstdc++ distribution internals.
// Streams are derived from (seed, tag, index); replicate tasks draw from
// their own stream, which makes sweeps deterministic under any thread
// scheduling.

inline std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline std::uint64_t fnv1a(std::string_view text) {
  std::uint64_t h = 1469598103934665603ULL;
  for (char c : text) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ULL;
  }
  return h;
}

class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform on [0, 1) with 53 random bits.
  double uniform01() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  // Standard normal via Box-Muller; the spare value is cached.
  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u1 = uniform01();
    while (u1 <= 0.0) u1 = uniform01();
    const double u2 = uniform01();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 6.283185307179586476925286766559 * u2;
    spare_ = radius * std::sin(angle);
    has_spare_ = true;
    return radius * std::cos(angle);
  }

  // Uniform integer in [lo, hi], inclusive, by rejection.
  long long uniform_int(long long lo, long long hi) {
    if (hi < lo) throw std::invalid_argument("uniform_int: empty range");
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span == 0) return static_cast<long long>(next_u64());  // full 64-bit range
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t draw = next_u64();
    while (draw >= limit) draw = next_u64();
    return lo + static_cast<long long>(draw % span);
  }

  // Uniform rational p/q with p in [lo*q, hi*q]; exact endpoints included.
  Rational uniform_rational(long long denominator, long long lo = 0, long long hi = 1) {
    if (denominator < 1) throw std::invalid_argument("uniform_rational: denominator must be >= 1");
    const long long p = uniform_int(lo * denominator, hi * denominator);
    return make_rational(static_cast<long>(p), static_cast<long>(denominator));
  }

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

inline RandomStream named_stream(std::uint64_t seed, std::string_view tag,
                                 std::uint64_t index = 0) {
  std::uint64_t state = seed ^ fnv1a(tag);
  std::uint64_t mixed = splitmix64(state);
  state ^= index * 0x9e3779b97f4a7c15ULL;
  mixed ^= splitmix64(state);
  return RandomStream(mixed);
}

}  // namespace polynet
