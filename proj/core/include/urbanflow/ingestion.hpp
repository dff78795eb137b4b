#pragma once

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "urbanflow/geo.hpp"

namespace urbanflow {

// One geotagged user observation.
struct ObservationRecord {
  std::string uid;  // opaque identifier, never parsed as a number
  GeoPoint point;
  std::int64_t timestamp_ms = 0;  // since Unix epoch, UTC

  friend bool operator==(const ObservationRecord&,
                         const ObservationRecord&) = default;
};

enum class RejectReason {
  WrongFieldCount,
  BadLatitude,
  BadLongitude,
  OutOfRangeLatitude,
  OutOfRangeLongitude,
  BadTimestamp,
  NonPositiveTimestamp,
  EmptyUid,
};

std::string to_string(RejectReason r);

struct RejectedRow {
  std::size_t line = 0;  // 1-based physical line in the file
  RejectReason reason{};
};

struct Dataset {
  std::vector<ObservationRecord> records;
  std::string source_path;
  std::size_t rejected_count = 0;
  std::vector<RejectedRow> rejected;  // detail for diagnostics
};

struct IngestError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct FileNotFoundError : IngestError {
  explicit FileNotFoundError(const std::string& path)
      : IngestError("cannot open input file: " + path) {}
};

struct MalformedHeaderError : IngestError {
  explicit MalformedHeaderError(const std::string& detail)
      : IngestError("malformed header: " + detail) {}
};

struct RowError : IngestError {
  RowError(std::size_t line, RejectReason reason)
      : IngestError("row error at line " + std::to_string(line) + ": " +
                    to_string(reason)),
        line(line),
        reason(reason) {}
  std::size_t line;
  RejectReason reason;
};

// Reads a comma-separated observation file. The first line may be a header
// naming uid,lat,lon,timestamp_ms in any order; a first line whose first
// field parses as a number is treated as a headerless data row in that
// canonical column order. Malformed rows are counted and skipped, or abort
// the read when strict is set.
Dataset read_observations(const std::filesystem::path& path,
                          bool strict = false);

// Writes records in the canonical uid,lat,lon,timestamp_ms layout with a
// header line.
void write_observations(const std::filesystem::path& path,
                        const std::vector<ObservationRecord>& records);

}  // namespace urbanflow
