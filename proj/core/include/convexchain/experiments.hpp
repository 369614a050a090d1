#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "convexchain/chain_solver.hpp"
#include "convexchain/sampling.hpp"

namespace convexchain {

/// Bounds on the limit constant alpha = lim n^{-1/3} E L_n.
struct ReferenceConstants {
  static constexpr double alphaLower = 1.5772;
  static constexpr double alphaUpper = 3.4249;
  static constexpr double alphaConjectured = 3.0;
};

struct ExperimentConfig {
  long n = 0;
  int replicates = 1;
  std::uint64_t masterSeed = 0;
  SampleModel model = SampleModel::uniform(0);
  std::optional<double> band;  // half-width for the banded solver
  int histogramBins = 0;       // 0: one bin per integer length
  int threads = 1;
};

struct RunSummary {
  long n = 0;
  int replicates = 0;
  double meanLength = 0.0;
  double normalizedMean = 0.0;  // n^{-1/3} * meanLength
  double sampleStdDev = 0.0;
  double empiricalMedian = 0.0;
  int dHalf = 0;  // floor(max |L - mean|)
  long histogramMin = 0;
  int histogramBinWidth = 1;
  std::vector<long> histogram;
  std::uint64_t masterSeed = 0;
  std::optional<double> band;
  double elapsedSeconds = 0.0;
  bool singleReplicate = false;  // std-dev degenerate warning flag
};

struct TrialEstimate {
  double estimate = 0.0;
  double standardError = 0.0;
  long replicates = 0;
};

struct LimitShapeRow {
  int replicate = 0;
  int length = 0;
  double distance = 0.0;
};

/// 2^k / (k! (k+1)!): the probability that k uniform points in a triangle
/// form a convex chain.
double convexChainProbabilityExact(long k);

/// Valtr's formula (n!)^{-2} C(2n-2,n-1)^2: the probability that n uniform
/// points in a parallelogram are in convex position. Requires n >= 3.
double valtrConvexPositionProbabilityExact(long n);

/// Monte Carlo estimate of the convex-chain probability at k points.
TrialEstimate runChainProbabilityTrial(long k, long replicates,
                                       std::uint64_t masterSeed);

/// Monte Carlo estimate of the convex-position probability for n uniform
/// points in the unit square.
TrialEstimate runConvexPositionTrial(long n, long replicates,
                                     std::uint64_t masterSeed);

/// Longest-chain Monte Carlo run. Deterministic given the config: each
/// replicate draws its own stream and results aggregate by index, so the
/// thread count never changes the output. When lengthsOut is non-null the
/// per-replicate chain lengths are stored there.
RunSummary runLengthExperiment(const ExperimentConfig& config,
                               std::vector<int>* lengthsOut = nullptr);

/// Per-replicate Hausdorff distances of one longest chain to the special
/// parabola.
std::vector<LimitShapeRow> runLimitShapeExperiment(
    const ExperimentConfig& config);

/// True iff the run's normalized mean lies inside the proven alpha bounds.
bool alphaBoundsCheck(const RunSummary& summary);

double medianOf(std::vector<double> values);

}  // namespace convexchain
