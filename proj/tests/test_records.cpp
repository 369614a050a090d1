#include <doctest.h>

#include <cmath>
#include <sstream>
#include <string>

#include "convexchain/records.hpp"
#include "convexchain/sampling.hpp"

using namespace convexchain;

TEST_CASE("point file parsing") {
  SUBCASE("comments and blanks") {
    std::istringstream in("# header\n0.1 0.4\n\n  0.5 0.1\n");
    const auto pts = parsePointFile(in);
    REQUIRE(pts.size() == 2);
    CHECK(pts[0] == Point{0.1, 0.4});
    CHECK(pts[1] == Point{0.5, 0.1});
  }
  SUBCASE("empty file") {
    std::istringstream in("");
    CHECK(parsePointFile(in).empty());
  }
  SUBCASE("malformed line cites its number") {
    std::istringstream in("0.1 0.4\na b\n");
    try {
      parsePointFile(in);
      FAIL("expected PointFileError");
    } catch (const PointFileError& e) {
      CHECK(e.line() == 2);
    }
  }
  SUBCASE("trailing garbage rejected") {
    std::istringstream in("0.1 0.4 extra\n");
    CHECK_THROWS_AS(parsePointFile(in), PointFileError);
  }
}

TEST_CASE("double formatting round-trips") {
  SplitMix64 rng(1u);
  for (int i = 0; i < 1000; ++i) {
    const double v = (rng.uniform() - 0.5) * std::pow(10.0, i % 20 - 10);
    CHECK(std::stod(formatDouble(v)) == v);
  }
}

TEST_CASE("summary record round-trip") {
  SplitMix64 rng(2u);
  for (int i = 0; i < 200; ++i) {
    RunSummary s;
    s.n = static_cast<long>(rng() % 100000);
    s.replicates = static_cast<int>(rng() % 1000) + 1;
    s.meanLength = rng.uniform() * 100;
    s.normalizedMean = rng.uniform() * 4;
    s.sampleStdDev = rng.uniform() * 3;
    s.empiricalMedian = rng.uniform() * 100;
    s.dHalf = static_cast<int>(rng() % 10);
    s.histogramMin = static_cast<long>(rng() % 50);
    s.histogramBinWidth = 1 + static_cast<int>(rng() % 3);
    s.histogram = {static_cast<long>(rng() % 7), static_cast<long>(rng() % 7)};
    s.masterSeed = rng();
    if (rng() % 2) s.band = rng.uniform();
    s.singleReplicate = s.replicates == 1;

    const RunSummary r = parseSummaryRecord(summaryRecordJson(s));
    CHECK(r.n == s.n);
    CHECK(r.replicates == s.replicates);
    CHECK(r.meanLength == s.meanLength);
    CHECK(r.normalizedMean == s.normalizedMean);
    CHECK(r.sampleStdDev == s.sampleStdDev);
    CHECK(r.empiricalMedian == s.empiricalMedian);
    CHECK(r.dHalf == s.dHalf);
    CHECK(r.histogramMin == s.histogramMin);
    CHECK(r.histogramBinWidth == s.histogramBinWidth);
    CHECK(r.histogram == s.histogram);
    CHECK(r.masterSeed == s.masterSeed);
    CHECK(r.band.has_value() == s.band.has_value());
    if (s.band) CHECK(*r.band == *s.band);
  }
}

TEST_CASE("records omit elapsed time unless asked") {
  RunSummary s;
  s.elapsedSeconds = 1.25;
  CHECK(summaryRecordJson(s).find("elapsed") == std::string::npos);
  CHECK(summaryRecordJson(s, true).find("elapsedSeconds") !=
        std::string::npos);
}

TEST_CASE("chain record") {
  Chain c;
  c.indices = {3, 1, 4};
  const std::string j = chainRecordJson(c);
  CHECK(j.find("\"length\":3") != std::string::npos);
  CHECK(j.find("[3,1,4]") != std::string::npos);
}

TEST_CASE("row formats") {
  CHECK(lengthRow(7, 123456789u, 42) == "7 123456789 42");
  CHECK(limitShapeRowText({2, 9, 0.5}) == "2 9 0.5");
}
