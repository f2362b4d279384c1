#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "lefkappa/classify.hpp"
#include "lefkappa/enumerate.hpp"

namespace lefkappa {

enum class OutputFormat { Text, Json };

/// Text: an aligned table with columns ID KIND INPUTS CHI SIGMA K2 KAPPA
/// PROVENANCE NOTES; a header alone when there are no rows.
/// Json: an array with one flat object per row (`[]` when empty).
/// Row order is preserved and the output is byte-deterministic.
std::string emit_report(const std::vector<ReportRow>& rows, OutputFormat format);

/// Enumeration / verification report: rows plus summary and failures. The
/// json form is an object {"summary", "records", "failures"}.
std::string emit_report(const EnumerationReport& report, OutputFormat format);

}  // namespace lefkappa
