#include "lefkappa/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "lefkappa/classify.hpp"
#include "lefkappa/dataset.hpp"
#include "lefkappa/enumerate.hpp"
#include "lefkappa/error.hpp"
#include "lefkappa/report.hpp"

namespace lefkappa {

namespace {

bool read_input(const std::string& path, std::string& text, std::ostream& err) {
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
    return true;
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    err << "error: cannot read " << path << "\n";
    return false;
  }
  text.assign(std::istreambuf_iterator<char>(in), {});
  return true;
}

bool any_violation(const std::vector<ReportRow>& rows) {
  return std::any_of(rows.begin(), rows.end(),
                     [](const ReportRow& r) { return !r.violations.empty(); });
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Kodaira dimensions and invariants of Lefschetz fibrations and pencils",
               "lefkappa"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format_name = "text";
  std::string mode_name = "euler";
  std::string output_path;
  app.add_option("--format", format_name, "Output format")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--mode", mode_name, "Singular-count convention for pencils")
      ->check(CLI::IsMember({"euler", "paper-literal"}));
  app.add_option("--output", output_path, "Write the report here instead of stdout");

  std::string input;
  auto* classify = app.add_subcommand("classify", "Run all applicable classifiers");
  auto* invariants = app.add_subcommand("invariants", "chi, sigma, K^2 and chi_h only");
  auto* check = app.add_subcommand("check", "Classify and cross-check records sharing an id");
  auto* convert = app.add_subcommand("convert", "Fibration <-> pencil conversions");
  for (auto* sub : {classify, invariants, check, convert})
    sub->add_option("file", input, "Dataset file ('-' for stdin)")->required();

  std::int64_t g_min = 2, g_max = 2, n_max = 0;
  unsigned workers = 1;
  std::uint64_t max_candidates = kDefaultCandidateLimit;
  auto* enumerate = app.add_subcommand("enumerate", "Exhaustive hyperelliptic (g,1) search");
  enumerate->add_option("--g-min", g_min, "Smallest fiber genus")->required();
  enumerate->add_option("--g-max", g_max, "Largest fiber genus")->required();
  enumerate->add_option("--n-max", n_max, "Largest singular-fiber count")->required();
  enumerate->add_option("--workers", workers, "Parallel workers")->check(CLI::Range(1u, 256u));
  enumerate->add_option("--max-candidates", max_candidates, "Refuse larger grids");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << "error: " << e.what() << "\n" << app.help();
    return kExitUsageOrParse;
  }

  const auto format = format_name == "json" ? OutputFormat::Json : OutputFormat::Text;
  const auto mode = *parse_convention_mode(mode_name);

  std::string report;
  int status = kExitOk;
  try {
    if (enumerate->parsed()) {
      EnumerationOptions opts;
      opts.workers = workers;
      opts.max_candidates = max_candidates;
      const auto r = enumerate_hyperelliptic(g_min, g_max, n_max, opts);
      report = emit_report(r, format);
      if (!r.ok()) status = kExitViolations;
    } else {
      std::string text;
      if (!read_input(input, text, err)) return kExitUsageOrParse;
      const auto parsed = parse_dataset(text);
      for (const auto& d : parsed.diagnostics) err << input << ": " << d.to_string() << "\n";

      if (check->parsed()) {
        const auto r = verify_dataset(parsed.records, mode);
        report = emit_report(r, format);
        if (!r.ok()) status = kExitViolations;
      } else {
        std::vector<ReportRow> rows;
        if (convert->parsed()) {
          rows = convert_dataset(parsed.records, mode);
        } else {
          for (const auto& rec : parsed.records)
            rows.push_back(classify->parsed() ? classify_record(rec, mode)
                                              : invariants_record(rec, mode));
        }
        for (const auto& r : rows)
          for (const auto& v : r.violations)
            err << input << ": line " << r.source_line << ": " << v << "\n";
        report = emit_report(rows, format);
        if (any_violation(rows)) status = kExitViolations;
      }
      if (!parsed.ok()) status = kExitUsageOrParse;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::ResourceLimit || e.code() == ErrorCode::InvalidArgument
               ? kExitUsageOrParse
               : kExitViolations;
  }

  if (output_path.empty()) {
    out << report;
  } else {
    std::ofstream file(output_path, std::ios::binary);
    if (!file || !(file << report)) {
      err << "error: cannot write " << output_path << "\n";
      return kExitUsageOrParse;
    }
  }
  return status;
}

}  // namespace lefkappa
