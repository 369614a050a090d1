#include <doctest.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <set>
#include <vector>

#include "convexchain/sampling.hpp"

using namespace convexchain;

namespace {

// Area of the part of the standard triangle {x,y >= 0, x+y <= 1} inside
// the box [a,b] x [c,d]: integral of clamp(1-x, c, d) - c over [a,b].
double boxTriangleArea(double a, double b, double c, double d) {
  const auto height = [&](double x) {
    return std::max(0.0, std::min(d, 1.0 - x) - c);
  };
  // Piecewise linear in x with breakpoints at 1-d and 1-c.
  std::vector<double> xs{a, b, std::clamp(1.0 - d, a, b),
                         std::clamp(1.0 - c, a, b)};
  std::sort(xs.begin(), xs.end());
  double area = 0.0;
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    area += 0.5 * (height(xs[i]) + height(xs[i + 1])) * (xs[i + 1] - xs[i]);
  }
  return area;
}

}  // namespace

TEST_CASE("determinism and stream independence") {
  const Triangle T = Triangle::standard();
  const auto a = sampleUniformTriangle({42, 3}, T, 100);
  const auto b = sampleUniformTriangle({42, 3}, T, 100);
  CHECK(a == b);
  CHECK(sampleUniformSquare({7, 0}, 10) == sampleUniformSquare({7, 0}, 10));
  CHECK_FALSE(sampleUniformTriangle({42, 4}, T, 100) == a);

  SUBCASE("no first-point collisions across replicates") {
    std::set<std::pair<double, double>> firsts;
    for (std::uint64_t rep = 0; rep < 10000; ++rep) {
      const auto pts = sampleUniformTriangle({42, rep}, T, 1);
      firsts.insert({pts[0].x, pts[0].y});
    }
    CHECK(firsts.size() == 10000);
  }
}

TEST_CASE("uniform triangle moments") {
  const Triangle T = Triangle::standard();
  const long n = 1000000;
  const auto pts = sampleUniformTriangle({2026, 0}, T, n);
  REQUIRE(static_cast<long>(pts.size()) == n);
  double mx = 0.0, my = 0.0;
  for (const auto& p : pts) {
    mx += p.x;
    my += p.y;
    CHECK(T.contains(p, 1e-12));
  }
  mx /= n;
  my /= n;
  CHECK(std::abs(mx - 1.0 / 3.0) < 4e-3);
  CHECK(std::abs(my - 1.0 / 3.0) < 4e-3);

  SUBCASE("fraction below y = x matches the area ratio") {
    // Shoelace: the part of T below y=x is the triangle (0,0),(1/2,1/2),(1,0)
    // ... computed here directly rather than assumed.
    const Triangle below({0.5, 0.5}, {0.0, 0.0}, {1.0, 0.0});
    const double ratio = below.area() / T.area();
    long hits = 0;
    for (const auto& p : pts) {
      if (p.y < p.x) ++hits;
    }
    const double frac = static_cast<double>(hits) / n;
    const double sigma = std::sqrt(ratio * (1 - ratio) / n);
    CHECK(std::abs(frac - ratio) < 3 * sigma + 1e-6);
  }

  SUBCASE("chi-square over a 4x4 grid") {
    std::array<long, 16> counts{};
    for (const auto& p : pts) {
      const int i = std::min(3, static_cast<int>(p.x * 4));
      const int j = std::min(3, static_cast<int>(p.y * 4));
      counts[4 * i + j]++;
    }
    double chi2 = 0.0;
    int dof = -1;
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) {
        const double cellArea = boxTriangleArea(i / 4.0, (i + 1) / 4.0,
                                                j / 4.0, (j + 1) / 4.0);
        if (cellArea <= 0.0) continue;
        const double expect = n * cellArea / T.area();
        const double diff = counts[4 * i + j] - expect;
        chi2 += diff * diff / expect;
        ++dof;
      }
    }
    // 10 populated cells -> dof = 9; chi2 quantile at 1 - 1e-6 is 44.81.
    CHECK(dof == 9);
    CHECK(chi2 < 44.81);
  }
}

TEST_CASE("uniform square") {
  CHECK(sampleUniformSquare({1, 0}, 0).empty());
  const long n = 200000;
  const auto pts = sampleUniformSquare({9, 0}, n);
  double mx = 0.0, my = 0.0;
  for (const auto& p : pts) {
    mx += p.x;
    my += p.y;
    CHECK(p.x >= 0.0);
    CHECK(p.x < 1.0);
  }
  CHECK(std::abs(mx / n - 0.5) < 3 * 0.2887 / std::sqrt(n));
  CHECK(std::abs(my / n - 0.5) < 3 * 0.2887 / std::sqrt(n));
}

TEST_CASE("Poisson counts") {
  const long reps = 100000;
  const double intensity = 100.0;
  double sum = 0.0, sumSq = 0.0;
  for (std::uint64_t rep = 0; rep < reps; ++rep) {
    SplitMix64 rng(SeedSpec{11, rep});
    const long m = poissonCount(rng, intensity);
    sum += m;
    sumSq += static_cast<double>(m) * m;
  }
  const double mean = sum / reps;
  const double var = sumSq / reps - mean * mean;
  CHECK(std::abs(mean - intensity) < 3 * std::sqrt(intensity) /
                                         std::sqrt(static_cast<double>(reps)));
  CHECK(var / mean > 0.97);
  CHECK(var / mean < 1.03);
}

TEST_CASE("Poisson process over the triangle") {
  const Triangle T = Triangle::standard();
  SUBCASE("counts in disjoint halves are uncorrelated") {
    const long reps = 20000;
    double sa = 0, sb = 0, sab = 0, saa = 0, sbb = 0;
    for (std::uint64_t rep = 0; rep < reps; ++rep) {
      const auto pts = samplePoissonTriangle({13, rep}, T, 80.0);
      long na = 0, nb = 0;
      for (const auto& p : pts) {
        (p.y < p.x ? na : nb)++;
      }
      sa += na;
      sb += nb;
      sab += static_cast<double>(na) * nb;
      saa += static_cast<double>(na) * na;
      sbb += static_cast<double>(nb) * nb;
    }
    const double ma = sa / reps, mb = sb / reps;
    const double cov = sab / reps - ma * mb;
    const double rho = cov / std::sqrt((saa / reps - ma * ma) *
                                       (sbb / reps - mb * mb));
    CHECK(std::abs(rho) < 0.03);
  }
  SUBCASE("points land inside the triangle") {
    const auto pts = samplePoissonTriangle({5, 1}, T, 500.0);
    for (const auto& p : pts) CHECK(T.contains(p, 1e-12));
  }
}
