#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace ccp {

// SplitMix64 step. Used only to derive sub-stream seeds.
inline std::uint64_t splitmix64(std::uint64_t state) {
  std::uint64_t z = state + 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Seed for sub-stream `stream` of `master`. Per-fold learner streams and
// per-trial Monte Carlo seeds are derived this way, so parallel and
// sequential execution consume identical randomness.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
  return splitmix64(master ^ splitmix64(stream));
}

// All randomness in the library flows through this generator. The engine is
// std::mt19937_64, whose output sequence is fixed by the standard; uniform
// draws, shuffling and normal variates are implemented here instead of with
// std::shuffle / std::*_distribution so results are identical across
// standard-library implementations, not merely across runs.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  // Unbiased draw from {0, ..., n-1} by rejection.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t v = gen_();
    while (v >= limit) v = gen_();
    return v % n;
  }

  // Uniform on [0, 1) with 53 random bits.
  double uniform01() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }

  // Uniform on (0, 1]; safe as a log() argument.
  double uniform01_open() {
    return static_cast<double>((gen_() >> 11) + 1) * 0x1.0p-53;
  }

  // Standard normal via Box-Muller (two fresh uniforms per call).
  double normal() {
    const double u = uniform01_open();
    const double v = uniform01();
    return std::sqrt(-2.0 * std::log(u)) * std::cos(6.283185307179586476925286766559 * v);
  }

  // Fisher-Yates shuffle.
  template <typename T>
  void shuffle(std::vector<T>& values) {
    for (std::size_t i = values.size(); i > 1; --i) {
      const std::size_t j = static_cast<std::size_t>(below(i));
      std::swap(values[i - 1], values[j]);
    }
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace ccp
