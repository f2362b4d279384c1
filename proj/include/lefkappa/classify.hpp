#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lefkappa/dataset.hpp"
#include "lefkappa/kodaira.hpp"
#include "lefkappa/pencil.hpp"
#include "lefkappa/rational.hpp"

namespace lefkappa {

/// One line of output: a record together with everything computed for it.
/// Absent optionals are quantities that cannot be determined from the record.
struct ReportRow {
  std::optional<std::string> id;
  std::string kind;
  std::string inputs;
  int source_line = 0;
  std::optional<std::int64_t> chi;
  std::optional<std::int64_t> sigma;
  std::optional<std::int64_t> k_squared;
  std::optional<Rational> chi_h;
  std::optional<KodairaDim> kappa;
  std::string provenance;
  std::optional<ConventionMode> mode;
  std::vector<std::string> notes;
  /// Consistency failures and per-record errors. Non-empty means exit 2.
  std::vector<std::string> violations;

  friend bool operator==(const ReportRow&, const ReportRow&) = default;
};

/// Runs every classifier that applies to the record. Errors raised by the
/// classifiers are collected into `violations`, never thrown.
ReportRow classify_record(const DatasetRecord& record, ConventionMode default_mode);

/// chi, sigma, K^2 and chi_h only.
ReportRow invariants_record(const DatasetRecord& record, ConventionMode default_mode);

/// Fibration <-> pencil conversions. Pencil rows get their derived pairing,
/// Fact-1 genus and singular count; fibration and triple rows are matched
/// with every pencil sharing their id and the converted genus is compared
/// with the pencil's own.
std::vector<ReportRow> convert_dataset(const std::vector<DatasetRecord>& records,
                                       ConventionMode default_mode);

}  // namespace lefkappa
