#include "convexchain/sampling.hpp"

#include <cmath>
#include <stdexcept>

namespace convexchain {

namespace {

std::uint64_t mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

}  // namespace

std::uint64_t deriveStreamSeed(const SeedSpec& spec) {
  return mix(mix(spec.masterSeed + 0x9E3779B97F4A7C15ull) ^
             (spec.replicateIndex * 0xBF58476D1CE4E5B9ull));
}

SplitMix64::SplitMix64(const SeedSpec& spec)
    : state_(deriveStreamSeed(spec)) {}

SampleModel SampleModel::uniform(long n) {
  if (n < 0) throw std::invalid_argument("SampleModel: n must be >= 0");
  SampleModel m;
  m.kind = Kind::Uniform;
  m.n = n;
  return m;
}

SampleModel SampleModel::poisson(double intensityCount) {
  if (!(intensityCount > 0.0)) {
    throw std::invalid_argument("SampleModel: intensity must be > 0");
  }
  SampleModel m;
  m.kind = Kind::Poisson;
  m.intensity = intensityCount;
  return m;
}

std::vector<Point> sampleUniformTriangle(const SeedSpec& seed,
                                         const Triangle& T, long n) {
  if (n < 0) throw std::invalid_argument("sampleUniformTriangle: n < 0");
  SplitMix64 rng(seed);
  std::vector<Point> pts;
  pts.reserve(static_cast<std::size_t>(n));
  const Point& a = T.v1();  // barycentric corner
  const double ex = T.v2().x - a.x, ey = T.v2().y - a.y;
  const double fx = T.v0().x - a.x, fy = T.v0().y - a.y;
  for (long i = 0; i < n; ++i) {
    double u = rng.uniform();
    double v = rng.uniform();
    if (u + v > 1.0) {
      u = 1.0 - u;
      v = 1.0 - v;
    }
    pts.push_back({a.x + u * ex + v * fx, a.y + u * ey + v * fy});
  }
  return pts;
}

long poissonCount(SplitMix64& rng, double mean) {
  if (!(mean > 0.0)) throw std::invalid_argument("poissonCount: mean <= 0");
  if (mean >= 30.0) {
    // Poisson(m) = Poisson(m/2) + Poisson(m/2), independently.
    const long a = poissonCount(rng, mean * 0.5);
    const long b = poissonCount(rng, mean * 0.5);
    return a + b;
  }
  // Inversion by sequential search.
  const double limit = std::exp(-mean);
  long k = 0;
  double prod = rng.uniform();
  while (prod > limit) {
    ++k;
    prod *= rng.uniform();
  }
  return k;
}

std::vector<Point> samplePoissonTriangle(const SeedSpec& seed,
                                         const Triangle& T,
                                         double intensityCount) {
  if (!(intensityCount > 0.0)) {
    throw std::invalid_argument("samplePoissonTriangle: intensity <= 0");
  }
  SplitMix64 rng(seed);
  const long m = poissonCount(rng, intensityCount);
  std::vector<Point> pts;
  pts.reserve(static_cast<std::size_t>(m));
  const Point& a = T.v1();
  const double ex = T.v2().x - a.x, ey = T.v2().y - a.y;
  const double fx = T.v0().x - a.x, fy = T.v0().y - a.y;
  for (long i = 0; i < m; ++i) {
    double u = rng.uniform();
    double v = rng.uniform();
    if (u + v > 1.0) {
      u = 1.0 - u;
      v = 1.0 - v;
    }
    pts.push_back({a.x + u * ex + v * fx, a.y + u * ey + v * fy});
  }
  return pts;
}

std::vector<Point> sampleUniformSquare(const SeedSpec& seed, long n) {
  if (n < 0) throw std::invalid_argument("sampleUniformSquare: n < 0");
  SplitMix64 rng(seed);
  std::vector<Point> pts;
  pts.reserve(static_cast<std::size_t>(n));
  for (long i = 0; i < n; ++i) {
    const double x = rng.uniform();
    const double y = rng.uniform();
    pts.push_back({x, y});
  }
  return pts;
}

}  // namespace convexchain
