#include "convexchain/records.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace convexchain {

std::vector<Point> parsePointFile(std::istream& in) {
  std::vector<Point> pts;
  std::string line;
  int lineNo = 0;
  while (std::getline(in, line)) {
    ++lineNo;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;

    std::istringstream fields(line);
    double x = 0.0, y = 0.0;
    if (!(fields >> x >> y)) {
      throw PointFileError(lineNo, "expected two reals: '" + line + "'");
    }
    std::string trailing;
    if (fields >> trailing) {
      throw PointFileError(lineNo, "trailing content: '" + trailing + "'");
    }
    if (!std::isfinite(x) || !std::isfinite(y)) {
      throw PointFileError(lineNo, "coordinates must be finite");
    }
    pts.push_back({x, y});
  }
  return pts;
}

std::string formatDouble(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string chainRecordJson(const Chain& chain) {
  nlohmann::json j;
  j["schema"] = kRecordSchemaVersion;
  j["type"] = "chain";
  j["length"] = chain.length();
  j["indices"] = chain.indices;
  return j.dump();
}

std::string summaryRecordJson(const RunSummary& s, bool includeElapsed) {
  nlohmann::json j;
  j["schema"] = kRecordSchemaVersion;
  j["type"] = "summary";
  j["n"] = s.n;
  j["replicates"] = s.replicates;
  j["meanLength"] = s.meanLength;
  j["normalizedMean"] = s.normalizedMean;
  j["stdDev"] = s.sampleStdDev;
  j["median"] = s.empiricalMedian;
  j["dHalf"] = s.dHalf;
  j["histogram"] = {{"min", s.histogramMin},
                    {"binWidth", s.histogramBinWidth},
                    {"counts", s.histogram}};
  j["seed"] = s.masterSeed;
  if (s.band) j["band"] = *s.band;
  if (s.singleReplicate) j["warning"] = "single-replicate-stddev";
  if (includeElapsed) j["elapsedSeconds"] = s.elapsedSeconds;
  return j.dump();
}

RunSummary parseSummaryRecord(const std::string& json) {
  const nlohmann::json j = nlohmann::json::parse(json);
  if (j.at("schema").get<int>() != kRecordSchemaVersion) {
    throw std::runtime_error("summary record: unknown schema version");
  }
  RunSummary s;
  s.n = j.at("n").get<long>();
  s.replicates = j.at("replicates").get<int>();
  s.meanLength = j.at("meanLength").get<double>();
  s.normalizedMean = j.at("normalizedMean").get<double>();
  s.sampleStdDev = j.at("stdDev").get<double>();
  s.empiricalMedian = j.at("median").get<double>();
  s.dHalf = j.at("dHalf").get<int>();
  s.histogramMin = j.at("histogram").at("min").get<long>();
  s.histogramBinWidth = j.at("histogram").at("binWidth").get<int>();
  s.histogram = j.at("histogram").at("counts").get<std::vector<long>>();
  s.masterSeed = j.at("seed").get<std::uint64_t>();
  if (j.contains("band")) s.band = j.at("band").get<double>();
  s.singleReplicate = j.contains("warning");
  if (j.contains("elapsedSeconds")) {
    s.elapsedSeconds = j.at("elapsedSeconds").get<double>();
  }
  return s;
}

std::string lengthRow(int replicate, std::uint64_t streamSeed, int length) {
  return std::to_string(replicate) + " " + std::to_string(streamSeed) + " " +
         std::to_string(length);
}

std::string limitShapeRowText(const LimitShapeRow& row) {
  return std::to_string(row.replicate) + " " + std::to_string(row.length) +
         " " + formatDouble(row.distance);
}

}  // namespace convexchain
