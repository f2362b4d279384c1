#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lefkappa/classify.hpp"
#include "lefkappa/dataset.hpp"
#include "lefkappa/hyperelliptic.hpp"
#include "lefkappa/kodaira.hpp"

namespace lefkappa {

inline constexpr std::uint64_t kDefaultCandidateLimit = 10'000'000;

struct EnumerationParams {
  std::int64_t g_min = 2;
  std::int64_t g_max = 2;
  std::int64_t n_max = 0;
  friend bool operator==(const EnumerationParams&, const EnumerationParams&) = default;
};

struct EnumerationOptions {
  std::uint64_t max_candidates = kDefaultCandidateLimit;
  unsigned workers = 1;
};

struct EnumeratedRecord {
  FibrationData data;
  std::int64_t sigma = 0;
  std::int64_t k_squared = 0;
  KodairaVerdict verdict;
  friend bool operator==(const EnumeratedRecord&, const EnumeratedRecord&) = default;
};

/// Output of the exhaustive harness and of dataset verification.
///
/// For an enumeration, `records` holds the admissible data in lexicographic
/// (g, a, s) order and `rows` is empty. For a dataset check, `rows` holds one
/// classified row per input record in input order and `records` is empty.
struct EnumerationReport {
  std::optional<EnumerationParams> parameters;
  std::uint64_t visited = 0;
  std::uint64_t admissible_count = 0;
  std::vector<EnumeratedRecord> records;
  std::vector<ReportRow> rows;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
  friend bool operator==(const EnumerationReport&, const EnumerationReport&) = default;
};

/// Number of (a, s) with a + sum(s) <= n_max for one fiber genus:
/// C(n_max + m, m) with m = 1 + floor(g/2) unknowns. Overflow-checked.
std::uint64_t candidate_count(std::int64_t g, std::int64_t n_max);
std::uint64_t candidate_count(const EnumerationParams& p);

/// Visits every hyperelliptic (g,1) datum with g in [g_min, g_max] and
/// a + sum(s) <= n_max, keeps those with an integral signature and checks
/// the dual K^2 computation, positivity and the mod-3 obstruction on each.
/// Property failures are collected, never thrown. Throws ResourceLimit when
/// the candidate count exceeds options.max_candidates.
EnumerationReport enumerate_hyperelliptic(std::int64_t g_min, std::int64_t g_max,
                                          std::int64_t n_max,
                                          const EnumerationOptions& options = {});

/// Classifies every record and checks that records sharing an id receive
/// the same Kodaira dimension.
EnumerationReport verify_dataset(const std::vector<DatasetRecord>& records,
                                 ConventionMode default_mode);

/// Report rows for either kind of report.
std::vector<ReportRow> report_rows(const EnumerationReport& report);

}  // namespace lefkappa
