// Command-line front end for longest convex chain computations and the
// Monte Carlo experiment harness.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "convexchain/chain_solver.hpp"
#include "convexchain/experiments.hpp"
#include "convexchain/geometry.hpp"
#include "convexchain/records.hpp"
#include "convexchain/sampling.hpp"

namespace cc = convexchain;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitPointOutside = 3;
constexpr int kExitOutput = 4;

cc::Triangle parseTriangleSpec(const std::string& spec) {
  if (spec == "standard") return cc::Triangle::standard();
  std::istringstream in(spec);
  double c[6];
  for (double& v : c) {
    if (!(in >> v)) {
      throw std::invalid_argument(
          "triangle spec must be 'standard' or six reals 'x0 y0 x1 y1 x2 y2'");
    }
  }
  return cc::Triangle({c[0], c[1]}, {c[2], c[3]}, {c[4], c[5]});
}

int cmdSolve(const std::string& inputPath, const std::string& triangleSpec,
             std::optional<double> band) {
  std::ifstream in(inputPath);
  if (!in) {
    std::cerr << "error: cannot read " << inputPath << "\n";
    return kExitUsage;
  }
  std::vector<cc::Point> pts;
  cc::Triangle T = cc::Triangle::standard();
  try {
    T = parseTriangleSpec(triangleSpec);
    pts = cc::parsePointFile(in);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (!T.contains(pts[i], 1e-9)) {
      std::cerr << "error: point " << i << " (" << cc::formatDouble(pts[i].x)
                << ", " << cc::formatDouble(pts[i].y)
                << ") lies outside the triangle\n";
      return kExitPointOutside;
    }
  }
  cc::ChainInstance inst(T, std::move(pts));
  const cc::Chain chain =
      band ? cc::longestChainBanded(inst, *band) : cc::longestChainExact(inst);
  std::cout << cc::chainRecordJson(chain) << "\n";
  return 0;
}

int cmdSimulate(long n, int reps, std::uint64_t seed, const std::string& model,
                std::optional<double> band, const std::string& outPath,
                int threads) {
  cc::ExperimentConfig config;
  config.n = n;
  config.replicates = reps;
  config.masterSeed = seed;
  config.model = model == "poisson"
                     ? cc::SampleModel::poisson(static_cast<double>(n))
                     : cc::SampleModel::uniform(n);
  config.band = band;
  config.threads = threads;

  std::vector<int> lengths;
  const cc::RunSummary summary = cc::runLengthExperiment(config, &lengths);

  std::ofstream out(outPath);
  if (!out) {
    std::cerr << "error: cannot write " << outPath << "\n";
    return kExitOutput;
  }
  out << "# replicate streamSeed length\n";
  for (int rep = 0; rep < reps; ++rep) {
    out << cc::lengthRow(rep,
                         cc::deriveStreamSeed(
                             {seed, static_cast<std::uint64_t>(rep)}),
                         lengths[rep])
        << "\n";
  }
  out << cc::summaryRecordJson(summary) << "\n";
  if (!out.flush()) {
    std::cerr << "error: write failure on " << outPath << "\n";
    return kExitOutput;
  }
  if (summary.singleReplicate) {
    std::cerr << "warning: single replicate, stdDev reported as 0\n";
  }
  std::cout << cc::formatDouble(summary.normalizedMean) << "\n";
  std::cerr << "elapsed: " << cc::formatDouble(summary.elapsedSeconds)
            << " s\n";
  return 0;
}

int cmdProbabilityChain(long k, long reps, std::uint64_t seed) {
  const cc::TrialEstimate est = cc::runChainProbabilityTrial(k, reps, seed);
  std::cout << "empirical " << cc::formatDouble(est.estimate) << " exact "
            << cc::formatDouble(cc::convexChainProbabilityExact(k))
            << " stderr " << cc::formatDouble(est.standardError) << "\n";
  return 0;
}

int cmdProbabilityConvexPosition(long n, long reps, std::uint64_t seed) {
  const cc::TrialEstimate est = cc::runConvexPositionTrial(n, reps, seed);
  std::cout << "empirical " << cc::formatDouble(est.estimate) << " exact "
            << cc::formatDouble(cc::valtrConvexPositionProbabilityExact(n))
            << " stderr " << cc::formatDouble(est.standardError) << "\n";
  return 0;
}

int cmdGeometryCheck(long samples, std::uint64_t seed) {
  cc::SplitMix64 rng(cc::SeedSpec{seed, 0});
  bool allPass = true;

  // Blaschke deficit bound, with the forced equality case.
  {
    long pass = 0;
    const double q0 = cc::blaschkeDeficit(0.5, 0.5, 0.5);
    bool equalityOk = std::abs(q0) <= 1e-12;
    std::optional<std::array<double, 3>> bad;
    for (long i = 0; i < samples; ++i) {
      const double a = rng.uniform(), b = rng.uniform(), c = rng.uniform();
      const double q = cc::blaschkeDeficit(a, b, c);
      if (q >= (a - b) * (a - b) / 3.0 - 1e-12) {
        ++pass;
      } else if (!bad) {
        bad = {{a, b, c}};
      }
    }
    std::cout << "blaschke-deficit: " << pass << "/" << samples
              << " pass, equality case "
              << (equalityOk ? "pass" : "FAIL") << "\n";
    if (pass != samples || !equalityOk) {
      allPass = false;
      if (bad) {
        std::cout << "  counterexample a=" << cc::formatDouble((*bad)[0])
                  << " b=" << cc::formatDouble((*bad)[1])
                  << " c=" << cc::formatDouble((*bad)[2]) << "\n";
      }
    }
  }

  // Cube-root additivity over random subdivisions of Gamma.
  {
    const long subdivisions = std::max(100L, samples / 100);
    long pass = 0;
    std::optional<double> badResidual;
    const double target = std::cbrt(0.5);
    for (long i = 0; i < subdivisions; ++i) {
      const int parts = 2 + static_cast<int>(rng() % 8);
      std::vector<double> us{0.0, 1.0};
      for (int j = 1; j < parts; ++j) us.push_back(rng.uniform());
      std::sort(us.begin(), us.end());
      us.erase(std::unique(us.begin(), us.end()), us.end());
      double sum = 0.0;
      for (std::size_t j = 0; j + 1 < us.size(); ++j) {
        sum += std::cbrt(cc::tangentTriangle(us[j], us[j + 1]).area());
      }
      if (std::abs(sum - target) < 1e-9) {
        ++pass;
      } else if (!badResidual) {
        badResidual = sum - target;
      }
    }
    std::cout << "cube-root-additivity: " << pass << "/" << subdivisions
              << " pass\n";
    if (pass != subdivisions) {
      allPass = false;
      std::cout << "  worst residual " << cc::formatDouble(*badResidual)
                << "\n";
    }
  }

  // Parallel tangent distance bound |r|/sqrt(8).
  {
    long pass = 0;
    std::optional<std::array<double, 2>> bad;
    for (long i = 0; i < samples; ++i) {
      const double r = -1.0 + 4.0 * rng.uniform();
      const double u = std::clamp(rng.uniform(), 1e-9, 1.0 - 1e-9);
      if (cc::parallelTangentDistance(r, u) <=
          std::abs(r) / std::sqrt(8.0) + 1e-12) {
        ++pass;
      } else if (!bad) {
        bad = {{r, u}};
      }
    }
    std::cout << "tangent-distance-bound: " << pass << "/" << samples
              << " pass\n";
    if (pass != samples) {
      allPass = false;
      std::cout << "  counterexample r=" << cc::formatDouble((*bad)[0])
                << " u=" << cc::formatDouble((*bad)[1]) << "\n";
    }
  }

  // Equal-area subdivision at t = 1/16: two triangles of area 1/16.
  {
    const auto tris = cc::equalAreaSubdivision(1.0 / 16.0);
    bool ok = tris.size() == 2;
    for (const auto& t : tris) {
      ok = ok && std::abs(t.area() - 1.0 / 16.0) < 1e-9;
    }
    std::cout << "equal-area-subdivision(1/16): " << (ok ? "pass" : "FAIL")
              << "\n";
    if (!ok) allPass = false;
  }

  return allPass ? 0 : 1;
}

int cmdLimitShape(long n, int reps, std::uint64_t seed,
                  std::optional<double> band, int threads,
                  const std::string& outPath) {
  cc::ExperimentConfig config;
  config.n = n;
  config.replicates = reps;
  config.masterSeed = seed;
  config.model = cc::SampleModel::uniform(n);
  config.band = band;
  config.threads = threads;
  const auto rows = cc::runLimitShapeExperiment(config);

  std::ofstream out(outPath);
  if (!out) {
    std::cerr << "error: cannot write " << outPath << "\n";
    return kExitOutput;
  }
  out << "# replicate length hausdorffDistance\n";
  std::vector<double> distances;
  for (const auto& row : rows) {
    out << cc::limitShapeRowText(row) << "\n";
    distances.push_back(row.distance);
  }
  std::sort(distances.begin(), distances.end());
  const auto quantile = [&](double q) {
    const std::size_t i = static_cast<std::size_t>(
        q * static_cast<double>(distances.size() - 1) + 0.5);
    return distances[i];
  };
  out << "{\"schema\":" << cc::kRecordSchemaVersion
      << ",\"type\":\"limitShapeSummary\",\"n\":" << n
      << ",\"replicates\":" << reps
      << ",\"medianDistance\":" << cc::formatDouble(cc::medianOf(distances))
      << ",\"q25\":" << cc::formatDouble(quantile(0.25))
      << ",\"q75\":" << cc::formatDouble(quantile(0.75)) << ",\"seed\":" << seed
      << "}\n";
  if (!out.flush()) {
    std::cerr << "error: write failure on " << outPath << "\n";
    return kExitOutput;
  }
  std::cout << cc::formatDouble(cc::medianOf(distances)) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Longest convex chains in a triangle: exact solver and "
               "Monte Carlo experiments"};
  app.require_subcommand(1);

  // solve
  auto* solve = app.add_subcommand("solve", "Longest convex chain of a point file");
  std::string inputPath;
  std::string triangleSpec = "standard";
  double bandValue = 0.0;
  solve->add_option("--input", inputPath, "Point file, 'x y' per line")
      ->required();
  solve->add_option("--triangle", triangleSpec,
                    "'standard' or 'x0 y0 x1 y1 x2 y2'");
  auto* solveBand = solve->add_option("--band", bandValue,
                                      "Banded solver half-width");

  // simulate
  auto* simulate = app.add_subcommand("simulate", "Length distribution runs");
  long simN = 0;
  int simReps = 0;
  std::uint64_t simSeed = 0;
  std::string simModel = "uniform";
  double simBandValue = 0.0;
  std::string simOut;
  int simThreads = 1;
  simulate->add_option("--n", simN)->required()->check(CLI::PositiveNumber);
  simulate->add_option("--reps", simReps)->required()->check(CLI::PositiveNumber);
  simulate->add_option("--seed", simSeed)->required();
  simulate->add_option("--model", simModel)
      ->check(CLI::IsMember({"uniform", "poisson"}));
  auto* simBand = simulate->add_option("--band", simBandValue);
  simulate->add_option("--out", simOut)->required();
  simulate->add_option("--threads", simThreads)->check(CLI::PositiveNumber);

  // probability
  auto* probability = app.add_subcommand("probability", "Formula checks");
  probability->require_subcommand(1);
  auto* probChain = probability->add_subcommand("chain");
  long probK = 0;
  long probReps = 0;
  std::uint64_t probSeed = 0;
  probChain->add_option("--k", probK)->required()->check(CLI::PositiveNumber);
  probChain->add_option("--reps", probReps)->required()->check(CLI::PositiveNumber);
  probChain->add_option("--seed", probSeed)->required();
  auto* probConvex = probability->add_subcommand("convex-position");
  long probN = 0;
  probConvex->add_option("--n", probN)->required()->check(CLI::PositiveNumber);
  probConvex->add_option("--reps", probReps)->required()->check(CLI::PositiveNumber);
  probConvex->add_option("--seed", probSeed)->required();

  // geometry-check
  auto* geometryCheck = app.add_subcommand("geometry-check",
                                           "Geometry invariant suite");
  long gcSamples = 0;
  std::uint64_t gcSeed = 0;
  geometryCheck->add_option("--samples", gcSamples)
      ->required()
      ->check(CLI::PositiveNumber);
  geometryCheck->add_option("--seed", gcSeed)->required();

  // limit-shape
  auto* limitShape = app.add_subcommand("limit-shape",
                                        "Chain-to-parabola distances");
  long lsN = 0;
  int lsReps = 0;
  std::uint64_t lsSeed = 0;
  double lsBandValue = 0.0;
  std::string lsOut;
  int lsThreads = 1;
  limitShape->add_option("--n", lsN)->required()->check(CLI::PositiveNumber);
  limitShape->add_option("--reps", lsReps)->required()->check(CLI::PositiveNumber);
  limitShape->add_option("--seed", lsSeed)->required();
  auto* lsBand = limitShape->add_option("--band", lsBandValue);
  limitShape->add_option("--out", lsOut)->required();
  limitShape->add_option("--threads", lsThreads)->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (solve->parsed()) {
      return cmdSolve(inputPath, triangleSpec,
                      solveBand->count() ? std::optional(bandValue)
                                         : std::nullopt);
    }
    if (simulate->parsed()) {
      return cmdSimulate(simN, simReps, simSeed, simModel,
                         simBand->count() ? std::optional(simBandValue)
                                          : std::nullopt,
                         simOut, simThreads);
    }
    if (probChain->parsed()) {
      return cmdProbabilityChain(probK, probReps, probSeed);
    }
    if (probConvex->parsed()) {
      return cmdProbabilityConvexPosition(probN, probReps, probSeed);
    }
    if (geometryCheck->parsed()) {
      return cmdGeometryCheck(gcSamples, gcSeed);
    }
    if (limitShape->parsed()) {
      return cmdLimitShape(lsN, lsReps, lsSeed,
                           lsBand->count() ? std::optional(lsBandValue)
                                           : std::nullopt,
                           lsThreads, lsOut);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
