#pragma once

#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <random>

namespace v2x {

// SplitMix64 output function, used only to spread seed material.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

// Deterministic random stream with hand-rolled samplers so that results are
// reproducible across standard library implementations. Substreams are
// derived by hashing a path of ids into the master seed; consumers that hold
// distinct paths never share a sequence.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  static Rng stream(std::uint64_t master, std::initializer_list<std::uint64_t> path) {
    std::uint64_t state = master ^ 0x243f6a8885a308d3ull;
    std::uint64_t h = splitmix64(state);
    for (std::uint64_t id : path) {
      state ^= (id + 0x9e3779b97f4a7c15ull) * 0xff51afd7ed558ccdull;
      h = splitmix64(state);
    }
    return Rng(h);
  }

  std::uint64_t next_u64() { return gen_(); }

  // Uniform on [0, 1) with 53-bit resolution.
  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Index in {0, ..., n-1}.
  std::size_t index(std::size_t n) {
    return static_cast<std::size_t>(uniform() * static_cast<double>(n)) % n;
  }

  // Unit-mean exponential variate.
  double exponential() { return -std::log1p(-uniform()); }

  // Standard normal via Box-Muller.
  double normal() {
    double u1 = 1.0 - uniform();  // (0, 1]
    double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(6.28318530717958647692528676655900577 * u2);
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace v2x
