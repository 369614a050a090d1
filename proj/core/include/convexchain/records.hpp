#pragma once

#include <istream>
#include <stdexcept>
#include <string>
#include <vector>

#include "convexchain/chain_solver.hpp"
#include "convexchain/experiments.hpp"

namespace convexchain {

/// Parse failure with the 1-based offending line number.
class PointFileError : public std::runtime_error {
 public:
  PointFileError(int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message),
        line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

/// Reads "x y" pairs, one per line; '#' starts a comment line, blank lines
/// are skipped. Throws PointFileError on malformed input.
std::vector<Point> parsePointFile(std::istream& in);

/// Shortest decimal form that round-trips the double ('.' separator,
/// up to 17 significant digits).
std::string formatDouble(double v);

inline constexpr int kRecordSchemaVersion = 1;

/// Chain result as a single JSON object (schema, type, length, indices).
std::string chainRecordJson(const Chain& chain);

/// RunSummary as a single JSON object. elapsedSeconds is only emitted when
/// requested: output files must be byte-identical across reruns.
std::string summaryRecordJson(const RunSummary& summary,
                              bool includeElapsed = false);

/// Inverse of summaryRecordJson (elapsedSeconds optional, defaulting to 0).
RunSummary parseSummaryRecord(const std::string& json);

/// Delimited per-replicate rows: "replicate streamSeed length".
std::string lengthRow(int replicate, std::uint64_t streamSeed, int length);

/// Delimited per-replicate rows: "replicate length distance".
std::string limitShapeRowText(const LimitShapeRow& row);

}  // namespace convexchain
