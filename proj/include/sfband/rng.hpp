// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <string_view>

namespace sfband {

// splitmix64 step; used to derive independent stream seeds from a user seed.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

// FNV-1a hash of an operation tag, e.g. "positions" or "noise".
inline std::uint64_t hash_tag(std::string_view tag) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : tag) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

// Deterministic random stream. Each (seed, tag) pair is an independent
// stream, so adding a new consumer never shifts the draws of another.
// Uniform doubles take the top 53 bits of mt19937_64 output; normals use
// Box-Muller with a cached spare. Identical (seed, tag) always reproduces
// the identical sequence, independent of platform and standard library.
class RandomStream {
 public:
  RandomStream(std::uint64_t seed, std::string_view tag)
      : engine_(splitmix64(seed ^ hash_tag(tag))) {}

  // Uniform on [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  // Uniform on [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Standard normal.
  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * M_PI * u2;
    spare_ = radius * std::sin(angle);
    has_spare_ = true;
    return radius * std::cos(angle);
  }

  // Circularly symmetric complex normal with total variance sigma_sq:
  // independent real and imaginary parts of variance sigma_sq / 2.
  std::complex<double> complex_normal(double sigma_sq) {
    const double scale = std::sqrt(0.5 * sigma_sq);
    const double re = normal();
    const double im = normal();
    return {scale * re, scale * im};
  }

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace sfband
