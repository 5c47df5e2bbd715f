#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "galign/align.hpp"

namespace galign {

// splitmix64 (Steele/Lea/Flood). Fixed in-repo so generated datasets are
// reproducible independent of platform or standard library.
class SplitMix64 {
 public:
  explicit constexpr SplitMix64(std::uint64_t seed) : state_(seed) {}

  constexpr std::uint64_t next() {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform on [0, 1), 53-bit resolution.
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Uniform on (0, 1]; safe under log().
  double uniform01_positive() { return static_cast<double>((next() >> 11) + 1) * 0x1.0p-53; }

  // Uniform on [-1, 1).
  double uniform_sym() { return 2.0 * uniform01() - 1.0; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

 private:
  std::uint64_t state_;
};

// Standard normal deviates via Box-Muller; the second value of each pair is
// handed out on the following call.
class GaussianStream {
 public:
  explicit GaussianStream(SplitMix64& rng) : rng_(rng) {}

  double next();

 private:
  SplitMix64& rng_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

struct GenerateParams {
  std::size_t n = 0;
  double noise_sigma = 0.0;
  std::uint64_t seed = 1;
  double angle = 0.0;
  Vec3 axis{0.0, 0.0, 1.0};
  Vec3 translation{};
};

struct GroundTruth {
  std::size_t n = 0;
  double noise_sigma = 0.0;
  std::uint64_t seed = 0;
  double angle = 0.0;
  Vec3 axis{0.0, 0.0, 1.0};  // unit length
  ga::Rotor rotor;
  Vec3 translation{};
};

struct GeneratedProblem {
  std::vector<WeightedPair> pairs;
  GroundTruth truth;
};

// Draws n source points v uniform in [-1,1]^3 (three draws per point, x y z,
// in point order), forms u = R (v - t) R~, then for noise_sigma > 0 adds one
// Gaussian triple per point in the same order from the same stream. Weights
// are 1. Identical params give identical output, byte for byte once written.
GeneratedProblem generate(const GenerateParams& params);

// Canonical JSON (sorted keys, 17 significant digits, trailing newline).
std::string truth_json(const GroundTruth& truth);

}  // namespace galign
