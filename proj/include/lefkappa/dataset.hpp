#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "lefkappa/hyperelliptic.hpp"
#include "lefkappa/lefschetz.hpp"
#include "lefkappa/pencil.hpp"

namespace lefkappa {

inline constexpr int kDatasetFormatVersion = 1;

enum class RecordKind { Fibration, Pencil, Triple, Elliptic };

std::string to_string(RecordKind kind);

struct Triple {
  std::int64_t g = 0;
  std::int64_t h = 0;
  std::int64_t n = 0;
  friend bool operator==(const Triple&, const Triple&) = default;
};

struct PencilEntry {
  PencilData data;
  bool k_dot_h_given = false;  // otherwise derived as 2k - 2 - A
  bool minimal = true;
  std::optional<ConventionMode> mode;  // per-record override
  friend bool operator==(const PencilEntry&, const PencilEntry&) = default;
};

using RecordPayload = std::variant<FibrationData, PencilEntry, Triple, EllipticDescriptor>;

struct DatasetRecord {
  std::optional<std::string> id;
  RecordPayload payload;
  int source_line = 0;

  RecordKind kind() const;

  // Source position is not part of a record's identity.
  friend bool operator==(const DatasetRecord& a, const DatasetRecord& b) {
    return a.id == b.id && a.payload == b.payload;
  }
};

struct Diagnostic {
  int line = 0;
  std::string token;
  std::string message;

  /// "line N: message"
  std::string to_string() const;
};

struct ParseResult {
  std::vector<DatasetRecord> records;
  std::vector<Diagnostic> diagnostics;
  bool ok() const { return diagnostics.empty(); }
};

/// Parses the line-oriented dataset format:
///
///   # lefkappa-format: 1
///   fibration id=M1 g=2 h=1 a=5 s=[0] hyperelliptic=true
///   pencil k=3 A=4 B=36 chi=24 sigma=-16
///   triple g=1 h=1 n=0
///   elliptic kind=enh n=2 h=0
///
/// Blank lines and '#' comments are skipped. A malformed line produces one
/// diagnostic and parsing resumes on the next line.
ParseResult parse_dataset(std::string_view text);

/// Canonical single-line form of a record; parse_dataset reads it back to an
/// equal record.
std::string format_record(const DatasetRecord& record);

/// format_record without the leading kind word and id, used as the
/// "inputs" column of reports.
std::string format_inputs(const DatasetRecord& record);

}  // namespace lefkappa
