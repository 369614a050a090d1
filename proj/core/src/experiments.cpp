#include "convexchain/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace convexchain {

namespace {

std::vector<Point> drawReplicate(const SampleModel& model,
                                 std::uint64_t masterSeed,
                                 std::uint64_t replicate,
                                 const Triangle& T) {
  const SeedSpec spec{masterSeed, replicate};
  if (model.kind == SampleModel::Kind::Uniform) {
    return sampleUniformTriangle(spec, T, model.n);
  }
  return samplePoissonTriangle(spec, T, model.intensity);
}

// Runs fn(replicate) for every replicate index on `threads` workers.
// Work is partitioned by index, so results are placement-stable.
template <typename Fn>
void forEachReplicate(int replicates, int threads, Fn fn) {
  threads = std::max(1, std::min(threads, replicates));
  if (threads == 1) {
    for (int i = 0; i < replicates; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([=]() {
      for (int i = t; i < replicates; i += threads) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

double binomialStdErr(double pHat, long reps) {
  return std::sqrt(pHat * (1.0 - pHat) / static_cast<double>(reps));
}

}  // namespace

double convexChainProbabilityExact(long k) {
  if (k < 0) throw std::invalid_argument("convexChainProbabilityExact: k < 0");
  if (k <= 25) {
    double v = 1.0;
    for (long i = 1; i <= k; ++i) {
      // Multiply by 2 / (i * (i+1)), accumulating 2^k / (k! (k+1)!).
      v *= 2.0 / (static_cast<double>(i) * static_cast<double>(i + 1));
    }
    return v;
  }
  const double kk = static_cast<double>(k);
  return std::exp(kk * std::log(2.0) - std::lgamma(kk + 1.0) -
                  std::lgamma(kk + 2.0));
}

double valtrConvexPositionProbabilityExact(long n) {
  if (n < 3) {
    throw std::invalid_argument(
        "valtrConvexPositionProbabilityExact: n must be >= 3");
  }
  const double nn = static_cast<double>(n);
  // log C(2n-2, n-1) = lgamma(2n-1) - 2*lgamma(n).
  const double logBinom =
      std::lgamma(2.0 * nn - 1.0) - 2.0 * std::lgamma(nn);
  return std::exp(2.0 * (logBinom - std::lgamma(nn + 1.0)));
}

TrialEstimate runChainProbabilityTrial(long k, long replicates,
                                       std::uint64_t masterSeed) {
  if (k < 1) throw std::invalid_argument("runChainProbabilityTrial: k < 1");
  if (replicates < 1) {
    throw std::invalid_argument("runChainProbabilityTrial: replicates < 1");
  }
  const Triangle T = Triangle::standard();
  std::vector<int> all(k);
  std::iota(all.begin(), all.end(), 0);
  long hits = 0;
  for (long rep = 0; rep < replicates; ++rep) {
    ChainInstance inst(
        T, sampleUniformTriangle({masterSeed, static_cast<std::uint64_t>(rep)},
                                 T, k));
    if (isConvexChain(inst, all)) ++hits;
  }
  const double p = static_cast<double>(hits) / replicates;
  return {p, binomialStdErr(p, replicates), replicates};
}

TrialEstimate runConvexPositionTrial(long n, long replicates,
                                     std::uint64_t masterSeed) {
  if (n < 3) throw std::invalid_argument("runConvexPositionTrial: n < 3");
  if (replicates < 1) {
    throw std::invalid_argument("runConvexPositionTrial: replicates < 1");
  }
  long hits = 0;
  for (long rep = 0; rep < replicates; ++rep) {
    const auto pts = sampleUniformSquare(
        {masterSeed, static_cast<std::uint64_t>(rep)}, n);
    if (isConvexPosition(pts)) ++hits;
  }
  const double p = static_cast<double>(hits) / replicates;
  return {p, binomialStdErr(p, replicates), replicates};
}

RunSummary runLengthExperiment(const ExperimentConfig& config,
                               std::vector<int>* lengthsOut) {
  if (config.replicates < 1) {
    throw std::invalid_argument("runLengthExperiment: replicates < 1");
  }
  if (config.band && !(*config.band > 0.0)) {
    throw std::invalid_argument("runLengthExperiment: band must be > 0");
  }
  const auto t0 = std::chrono::steady_clock::now();
  const Triangle T = Triangle::standard();

  std::vector<int> lengths(config.replicates);
  forEachReplicate(config.replicates, config.threads, [&](int rep) {
    ChainInstance inst(T, drawReplicate(config.model, config.masterSeed,
                                        static_cast<std::uint64_t>(rep), T));
    const Chain chain = config.band
                            ? longestChainBanded(inst, *config.band)
                            : longestChainExact(inst);
    lengths[rep] = chain.length();
  });

  RunSummary s;
  s.n = config.model.kind == SampleModel::Kind::Uniform
            ? config.model.n
            : static_cast<long>(std::llround(config.model.intensity));
  s.replicates = config.replicates;
  s.masterSeed = config.masterSeed;
  s.band = config.band;
  s.singleReplicate = config.replicates == 1;

  const double mean =
      std::accumulate(lengths.begin(), lengths.end(), 0.0) / lengths.size();
  s.meanLength = mean;
  s.normalizedMean =
      s.n > 0 ? mean / std::cbrt(static_cast<double>(s.n)) : 0.0;

  double ss = 0.0;
  double maxDev = 0.0;
  for (int L : lengths) {
    const double d = L - mean;
    ss += d * d;
    maxDev = std::max(maxDev, std::abs(d));
  }
  s.sampleStdDev =
      lengths.size() > 1 ? std::sqrt(ss / (lengths.size() - 1)) : 0.0;
  s.dHalf = static_cast<int>(std::floor(maxDev));

  std::vector<int> sorted = lengths;
  std::sort(sorted.begin(), sorted.end());
  const std::size_t m = sorted.size();
  s.empiricalMedian = (m % 2 == 1)
                          ? sorted[m / 2]
                          : 0.5 * (sorted[m / 2 - 1] + sorted[m / 2]);

  const long minL = sorted.front();
  const long maxL = sorted.back();
  const long span = maxL - minL + 1;
  int width = 1;
  if (config.histogramBins > 0 && span > config.histogramBins) {
    width = static_cast<int>((span + config.histogramBins - 1) /
                             config.histogramBins);
  }
  s.histogramMin = minL;
  s.histogramBinWidth = width;
  s.histogram.assign(static_cast<std::size_t>((span + width - 1) / width), 0);
  for (int L : lengths) s.histogram[(L - minL) / width]++;

  s.elapsedSeconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  if (lengthsOut) *lengthsOut = std::move(lengths);
  return s;
}

std::vector<LimitShapeRow> runLimitShapeExperiment(
    const ExperimentConfig& config) {
  if (config.replicates < 1) {
    throw std::invalid_argument("runLimitShapeExperiment: replicates < 1");
  }
  const Triangle T = Triangle::standard();
  std::vector<LimitShapeRow> rows(config.replicates);
  forEachReplicate(config.replicates, config.threads, [&](int rep) {
    ChainInstance inst(T, drawReplicate(config.model, config.masterSeed,
                                        static_cast<std::uint64_t>(rep), T));
    const Chain chain = config.band
                            ? longestChainBanded(inst, *config.band)
                            : longestChainExact(inst);
    std::vector<Point> pts;
    pts.reserve(chain.indices.size());
    for (int i : chain.indices) pts.push_back(inst.points[i]);
    rows[rep] = {rep, chain.length(),
                 hausdorffDistanceToParabola(pts, T, 0.0)};
  });
  return rows;
}

bool alphaBoundsCheck(const RunSummary& summary) {
  return summary.normalizedMean >= ReferenceConstants::alphaLower &&
         summary.normalizedMean <= ReferenceConstants::alphaUpper;
}

double medianOf(std::vector<double> values) {
  if (values.empty()) {
    throw std::invalid_argument("medianOf: empty input");
  }
  std::sort(values.begin(), values.end());
  const std::size_t m = values.size();
  return (m % 2 == 1) ? values[m / 2]
                      : 0.5 * (values[m / 2 - 1] + values[m / 2]);
}

}  // namespace convexchain
