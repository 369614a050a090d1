#include <doctest.h>

#include <cmath>
#include <vector>

#include "convexchain/experiments.hpp"

using namespace convexchain;

TEST_CASE("exact convex-chain probability") {
  CHECK(convexChainProbabilityExact(0) == doctest::Approx(1.0));
  CHECK(convexChainProbabilityExact(1) == doctest::Approx(1.0));
  CHECK(convexChainProbabilityExact(2) ==
        doctest::Approx(1.0 / 3.0).epsilon(1e-14));
  CHECK(convexChainProbabilityExact(3) ==
        doctest::Approx(1.0 / 18.0).epsilon(1e-14));
  // Log path agrees with the direct product where both apply.
  CHECK(convexChainProbabilityExact(30) > 0.0);
  CHECK(std::log(convexChainProbabilityExact(25)) ==
        doctest::Approx(25 * std::log(2.0) - std::lgamma(26.0) -
                        std::lgamma(27.0))
            .epsilon(1e-10));
}

TEST_CASE("exact convex-position probability (Valtr)") {
  CHECK_THROWS_AS(valtrConvexPositionProbabilityExact(2),
                  std::invalid_argument);
  CHECK(valtrConvexPositionProbabilityExact(3) ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(valtrConvexPositionProbabilityExact(4) ==
        doctest::Approx(25.0 / 36.0).epsilon(1e-12));
  CHECK(valtrConvexPositionProbabilityExact(5) ==
        doctest::Approx(49.0 / 144.0).epsilon(1e-12));

  SUBCASE("2^n * valtr(n) < (240/n^2)^n for n = 3..30") {
    for (long n = 3; n <= 30; ++n) {
      const double lhs = std::log(valtrConvexPositionProbabilityExact(n)) +
                         n * std::log(2.0);
      const double rhs =
          n * (std::log(240.0) - 2.0 * std::log(static_cast<double>(n)));
      CHECK(lhs < rhs);
    }
  }
}

TEST_CASE("chain probability trials") {
  SUBCASE("k = 1 is exactly one") {
    const TrialEstimate est = runChainProbabilityTrial(1, 2000, 9);
    CHECK(est.estimate == 1.0);
    CHECK(est.standardError == 0.0);
  }
  SUBCASE("k = 2 near 1/3") {
    const TrialEstimate est = runChainProbabilityTrial(2, 100000, 10);
    CHECK(std::abs(est.estimate - 1.0 / 3.0) < 4 * est.standardError);
  }
  SUBCASE("k = 3 near 1/18") {
    const TrialEstimate est = runChainProbabilityTrial(3, 100000, 11);
    CHECK(std::abs(est.estimate - 1.0 / 18.0) < 4 * est.standardError);
  }
}

TEST_CASE("convex-position trials") {
  SUBCASE("n = 3 is one up to collinearity tolerance") {
    const TrialEstimate est = runConvexPositionTrial(3, 5000, 12);
    CHECK(est.estimate == 1.0);
  }
  SUBCASE("n = 4 near 25/36") {
    const TrialEstimate est = runConvexPositionTrial(4, 100000, 13);
    CHECK(std::abs(est.estimate - 25.0 / 36.0) < 4 * est.standardError);
  }
  SUBCASE("n = 5 near 49/144") {
    const TrialEstimate est = runConvexPositionTrial(5, 100000, 14);
    CHECK(std::abs(est.estimate - 49.0 / 144.0) < 4 * est.standardError);
  }
}

TEST_CASE("length experiment summaries") {
  ExperimentConfig config;
  config.model = SampleModel::uniform(1);
  config.n = 1;
  config.replicates = 50;
  config.masterSeed = 4;

  SUBCASE("n = 1: every replicate has length 1") {
    const RunSummary s = runLengthExperiment(config);
    CHECK(s.meanLength == doctest::Approx(1.0));
    CHECK(s.sampleStdDev == doctest::Approx(0.0));
    CHECK(s.dHalf == 0);
  }

  SUBCASE("histogram totals the replicates; median within range") {
    config.model = SampleModel::uniform(200);
    config.n = 200;
    const RunSummary s = runLengthExperiment(config);
    long total = 0;
    for (long c : s.histogram) total += c;
    CHECK(total == s.replicates);
    CHECK(s.empiricalMedian >= s.histogramMin);
    CHECK(s.empiricalMedian <=
          s.histogramMin +
              static_cast<long>(s.histogram.size()) * s.histogramBinWidth);
  }

  SUBCASE("deterministic replay, independent of thread count") {
    config.model = SampleModel::uniform(300);
    config.n = 300;
    config.replicates = 24;
    std::vector<int> l1, l2;
    config.threads = 1;
    const RunSummary a = runLengthExperiment(config, &l1);
    config.threads = 5;
    const RunSummary b = runLengthExperiment(config, &l2);
    CHECK(l1 == l2);
    CHECK(a.meanLength == b.meanLength);
    CHECK(a.histogram == b.histogram);
    CHECK(a.dHalf == b.dHalf);
  }

  SUBCASE("single replicate flags degenerate std-dev") {
    config.replicates = 1;
    const RunSummary s = runLengthExperiment(config);
    CHECK(s.singleReplicate);
    CHECK(s.sampleStdDev == 0.0);
  }

  SUBCASE("poisson model runs and normalizes by the intensity") {
    config.model = SampleModel::poisson(300.0);
    config.replicates = 20;
    const RunSummary s = runLengthExperiment(config);
    CHECK(s.n == 300);
    CHECK(s.normalizedMean ==
          doctest::Approx(s.meanLength / std::cbrt(300.0)));
  }
}

TEST_CASE("alpha bounds check") {
  RunSummary s;
  s.normalizedMean = 2.532;
  CHECK(alphaBoundsCheck(s));
  s.normalizedMean = 3.6;
  CHECK_FALSE(alphaBoundsCheck(s));
  s.normalizedMean = 1.0;
  CHECK_FALSE(alphaBoundsCheck(s));
  static_assert(ReferenceConstants::alphaLower <
                ReferenceConstants::alphaConjectured);
  static_assert(ReferenceConstants::alphaConjectured <
                ReferenceConstants::alphaUpper);
}

TEST_CASE("limit shape rows") {
  ExperimentConfig config;
  config.n = 400;
  config.model = SampleModel::uniform(400);
  config.replicates = 10;
  config.masterSeed = 21;
  const auto rows = runLimitShapeExperiment(config);
  REQUIRE(static_cast<int>(rows.size()) == config.replicates);
  std::vector<double> distances;
  for (const auto& row : rows) {
    CHECK(row.length > 0);
    CHECK(row.distance > 0.0);
    CHECK(row.distance < std::sqrt(2.0) / 4.0 + 1e-9);
    distances.push_back(row.distance);
  }
  CHECK(medianOf(distances) < 0.2);
}

TEST_CASE("cross-module consistency for a forced one-point instance") {
  // A single point at the parabola vertex: the chain distance equals the
  // geometry module's value for that chain.
  const Triangle T = Triangle::standard();
  const std::vector<Point> chain{{0.25, 0.25}};
  const double d = hausdorffDistanceToParabola(chain, T);
  const ChainInstance inst(T, chain);
  const Chain c = longestChainExact(inst);
  REQUIRE(c.length() == 1);
  std::vector<Point> chainPts{inst.points[c.indices[0]]};
  CHECK(hausdorffDistanceToParabola(chainPts, T) == doctest::Approx(d));
}
