#pragma once

#include <cstdint>
#include <vector>

#include "convexchain/geometry.hpp"

namespace convexchain {

/// Identifies one replicate's random stream. The derived stream is a pure
/// function of (masterSeed, replicateIndex), so replicates may be generated
/// in any order or concurrently without changing results.
struct SeedSpec {
  std::uint64_t masterSeed = 0;
  std::uint64_t replicateIndex = 0;
};

/// Hash of (masterSeed, replicateIndex) used to seed a replicate's stream.
std::uint64_t deriveStreamSeed(const SeedSpec& spec);

/// SplitMix64: 64-bit counter-based generator. One mixing round is also
/// used as the (masterSeed, replicateIndex) -> stream hash.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  explicit SplitMix64(const SeedSpec& spec);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return ~0ull; }

  result_type operator()() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0,1) with 53 random bits.
  double uniform() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

/// Sampling model: a fixed count of uniform points, or a Poisson process
/// given by its expected total count over the region.
struct SampleModel {
  enum class Kind { Uniform, Poisson };

  Kind kind = Kind::Uniform;
  long n = 0;               // Uniform
  double intensity = 0.0;   // Poisson: expected total count

  static SampleModel uniform(long n);
  static SampleModel poisson(double intensityCount);
};

/// n i.i.d. uniform points in T: (u,v) uniform on the unit square, folded
/// across u+v=1, then mapped by the triangle's barycentric frame.
std::vector<Point> sampleUniformTriangle(const SeedSpec& seed,
                                         const Triangle& T, long n);

/// Poisson process over T with expected total count intensityCount: draw
/// m ~ Poisson(intensityCount), then m uniform points.
std::vector<Point> samplePoissonTriangle(const SeedSpec& seed,
                                         const Triangle& T,
                                         double intensityCount);

/// n i.i.d. uniform points in the unit square.
std::vector<Point> sampleUniformSquare(const SeedSpec& seed, long n);

/// Poisson count by inversion for small means; larger means are split into
/// independent halves, keeping the draw exact and deterministic.
long poissonCount(SplitMix64& rng, double mean);

}  // namespace convexchain
