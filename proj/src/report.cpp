#include "lefkappa/report.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include <json.hpp>

namespace lefkappa {

namespace {

using json = nlohmann::ordered_json;

template <typename T>
json or_null(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

json row_json(const ReportRow& r) {
  json o;
  o["id"] = or_null(r.id);
  o["kind"] = r.kind;
  o["line"] = r.source_line;
  o["inputs"] = r.inputs;
  o["chi"] = or_null(r.chi);
  o["sigma"] = or_null(r.sigma);
  o["k_squared"] = or_null(r.k_squared);
  o["chi_h"] = r.chi_h ? json(r.chi_h->to_string()) : json(nullptr);
  o["kappa"] = r.kappa ? json(r.kappa->to_string()) : json(nullptr);
  o["provenance"] = r.provenance.empty() ? json(nullptr) : json(r.provenance);
  o["mode"] = r.mode ? json(to_string(*r.mode)) : json(nullptr);
  o["notes"] = r.notes;
  o["violations"] = r.violations;
  return o;
}

std::string rows_json(const std::vector<ReportRow>& rows) {
  if (rows.empty()) return "[]";
  std::string out = "[\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    out += row_json(rows[i]).dump();
    out += i + 1 < rows.size() ? ",\n" : "\n";
  }
  return out + "]";
}

template <typename T>
std::string cell(const std::optional<T>& v) {
  if (!v) return "-";
  if constexpr (std::is_same_v<T, KodairaDim> || std::is_same_v<T, Rational>)
    return v->to_string();
  else
    return std::to_string(*v);
}

std::string rows_text(const std::vector<ReportRow>& rows) {
  constexpr std::size_t kCols = 9;
  using Line = std::array<std::string, kCols>;
  std::vector<Line> table;
  table.push_back({"ID", "KIND", "INPUTS", "CHI", "SIGMA", "K2", "KAPPA", "PROVENANCE", "NOTES"});
  for (const auto& r : rows) {
    std::string notes;
    for (const auto& n : r.notes) notes += (notes.empty() ? "" : "; ") + n;
    for (const auto& v : r.violations) notes += (notes.empty() ? "!" : "; !") + v;
    if (r.mode) notes += (notes.empty() ? "mode=" : "; mode=") + to_string(*r.mode);
    table.push_back({r.id.value_or("-"), r.kind, r.inputs, cell(r.chi), cell(r.sigma),
                     cell(r.k_squared), cell(r.kappa),
                     r.provenance.empty() ? "-" : r.provenance, notes.empty() ? "-" : notes});
  }
  std::array<std::size_t, kCols> width{};
  for (const auto& line : table)
    for (std::size_t c = 0; c < kCols; ++c) width[c] = std::max(width[c], line[c].size());

  std::string out;
  for (const auto& line : table) {
    std::string text;
    for (std::size_t c = 0; c < kCols; ++c) {
      text += line[c];
      if (c + 1 < kCols) text += std::string(width[c] - line[c].size() + 2, ' ');
    }
    text.erase(text.find_last_not_of(' ') + 1);
    out += text + "\n";
  }
  return out;
}

}  // namespace

std::string emit_report(const std::vector<ReportRow>& rows, OutputFormat format) {
  if (format == OutputFormat::Json) return rows_json(rows) + "\n";
  return rows_text(rows);
}

std::string emit_report(const EnumerationReport& report, OutputFormat format) {
  const auto rows = report_rows(report);
  if (format == OutputFormat::Json) {
    json summary;
    if (report.parameters) {
      summary["g_min"] = report.parameters->g_min;
      summary["g_max"] = report.parameters->g_max;
      summary["n_max"] = report.parameters->n_max;
    }
    summary["visited"] = report.visited;
    summary["admissible_count"] = report.admissible_count;
    summary["failure_count"] = report.failures.size();
    std::string out = "{\n\"summary\":" + summary.dump() + ",\n\"records\":";
    out += rows_json(rows);
    out += ",\n\"failures\":" + json(report.failures).dump() + "\n}\n";
    return out;
  }
  std::string out = rows_text(rows);
  std::ostringstream s;
  s << "#";
  if (report.parameters)
    s << " g=" << report.parameters->g_min << ".." << report.parameters->g_max
      << " n<=" << report.parameters->n_max;
  s << " visited=" << report.visited << " admissible=" << report.admissible_count
    << " failures=" << report.failures.size() << "\n";
  for (const auto& f : report.failures) s << "FAIL " << f << "\n";
  return out + s.str();
}

}  // namespace lefkappa
