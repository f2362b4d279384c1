#include "lefkappa/enumerate.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <thread>

#include "lefkappa/checked.hpp"
#include "lefkappa/error.hpp"
#include "lefkappa/lefschetz.hpp"

namespace lefkappa {

namespace {

std::uint64_t checked_u64_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    throw Error(ErrorCode::Overflow, "candidate count exceeds 64 bits");
  return r;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // r * (n-k+i) is divisible by i at every step.
    const std::uint64_t num = n - k + i;
    const std::uint64_t g = std::gcd(r, i);
    r = checked_u64_mul(r / g, num / (i / g));
  }
  return r;
}

struct Task {
  std::int64_t g;
  std::int64_t a;
};

struct TaskResult {
  std::uint64_t visited = 0;
  std::vector<EnumeratedRecord> records;
  std::vector<std::string> failures;
};

std::string describe(const FibrationData& d) {
  std::string s = "g=" + std::to_string(d.g) + " a=" + std::to_string(d.nonseparating) + " s=[";
  for (std::size_t i = 0; i < d.separating.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(d.separating[i]);
  }
  return s + "]";
}

void check_record(const EnumeratedRecord& r, std::int64_t n, std::vector<std::string>& failures) {
  const std::string who = describe(r.data) + ": ";
  const std::int64_t via_sigma = checked::add(checked::mul(3, r.sigma), checked::mul(2, n));
  if (r.k_squared != via_sigma)
    failures.push_back(who + "K^2 expansion " + std::to_string(r.k_squared) +
                       " != 3 sigma + 2 n = " + std::to_string(via_sigma));
  if (n > 0 && r.k_squared <= 0)
    failures.push_back(who + "K^2 = " + std::to_string(r.k_squared) + " not positive");
  if (n > 0) {
    const auto obstructions = conjecture_obstructions(r.data);
    if (obstructions.contradictory()) failures.push_back(who + "contradictory obstructions");
    for (const auto& f : obstructions.fired)
      if (f.conclusion != r.verdict.dim)
        failures.push_back(who + f.name + " concludes " + f.conclusion.to_string() +
                           ", verdict is " + r.verdict.dim.to_string());
    const auto table = kappa_lefschetz(r.data.g, 1, n).dim;
    if (table != r.verdict.dim)
      failures.push_back(who + "table gives " + table.to_string() + ", verdict is " +
                         r.verdict.dim.to_string());
  }
}

// All s-vectors for one (g, a) in lexicographic order.
TaskResult run_task(const Task& t, std::int64_t n_max) {
  TaskResult out;
  const auto width = static_cast<std::size_t>(t.g / 2);
  const std::int64_t budget = n_max - t.a;
  std::vector<std::int64_t> s(width, 0);
  std::int64_t sum = 0;
  while (true) {
    ++out.visited;
    FibrationData d;
    d.g = t.g;
    d.h = 1;
    d.nonseparating = t.a;
    d.separating = s;
    d.hyperelliptic = true;

    const Rational sigma = endo_signature_exact(d);
    if (sigma.is_integer()) {
      const std::int64_t n = t.a + sum;
      try {
        EnumeratedRecord r;
        r.sigma = sigma.numerator();
        r.k_squared = hyperelliptic_k_squared(d);
        r.verdict = n > 0 ? prop_he_verdict(d) : kappa_lefschetz(d.g, 1, 0);
        r.data = d;
        check_record(r, n, out.failures);
        out.records.push_back(std::move(r));
      } catch (const Error& e) {
        out.failures.push_back(describe(d) + ": " + e.what());
      }
    }

    // Odometer increment, last coordinate fastest, bounded by the budget.
    std::size_t i = width;
    while (i > 0) {
      --i;
      if (sum < budget) {
        ++s[i];
        ++sum;
        break;
      }
      sum -= s[i];
      s[i] = 0;
      if (i == 0) return out;
    }
    if (width == 0) return out;
  }
}

}  // namespace

std::uint64_t candidate_count(std::int64_t g, std::int64_t n_max) {
  if (g < 0 || n_max < 0) throw Error(ErrorCode::InvalidArgument, "negative enumeration bound");
  const auto m = static_cast<std::uint64_t>(1 + g / 2);
  return binomial(static_cast<std::uint64_t>(n_max) + m, m);
}

std::uint64_t candidate_count(const EnumerationParams& p) {
  std::uint64_t total = 0;
  for (std::int64_t g = p.g_min; g <= p.g_max; ++g) {
    const std::uint64_t c = candidate_count(g, p.n_max);
    if (__builtin_add_overflow(total, c, &total))
      throw Error(ErrorCode::Overflow, "candidate count exceeds 64 bits");
  }
  return total;
}

EnumerationReport enumerate_hyperelliptic(std::int64_t g_min, std::int64_t g_max,
                                          std::int64_t n_max,
                                          const EnumerationOptions& options) {
  if (g_min < 2 || g_max < g_min)
    throw Error(ErrorCode::InvalidArgument, "need 2 <= g_min <= g_max");
  if (n_max < 0) throw Error(ErrorCode::InvalidArgument, "need n_max >= 0");

  EnumerationReport report;
  report.parameters = EnumerationParams{g_min, g_max, n_max};
  const std::uint64_t expected = candidate_count(*report.parameters);
  if (expected > options.max_candidates)
    throw Error(ErrorCode::ResourceLimit,
                "grid has " + std::to_string(expected) + " candidates, limit is " +
                    std::to_string(options.max_candidates));

  std::vector<Task> tasks;
  for (std::int64_t g = g_min; g <= g_max; ++g)
    for (std::int64_t a = 0; a <= n_max; ++a) tasks.push_back({g, a});

  // Workers take strided slices; results land in per-task slots so the
  // merge below is independent of scheduling.
  std::vector<TaskResult> results(tasks.size());
  const unsigned workers =
      std::max(1u, std::min<unsigned>(options.workers, static_cast<unsigned>(tasks.size())));
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        for (std::size_t i = w; i < tasks.size(); i += workers)
          results[i] = run_task(tasks[i], n_max);
      });
  }

  for (auto& r : results) {
    report.visited += r.visited;
    std::move(r.records.begin(), r.records.end(), std::back_inserter(report.records));
    std::move(r.failures.begin(), r.failures.end(), std::back_inserter(report.failures));
  }
  report.admissible_count = report.records.size();
  if (report.visited != expected)
    report.failures.push_back("visited " + std::to_string(report.visited) +
                              " candidates, closed form gives " + std::to_string(expected));
  return report;
}

EnumerationReport verify_dataset(const std::vector<DatasetRecord>& records,
                                 ConventionMode default_mode) {
  EnumerationReport report;
  report.visited = records.size();
  std::map<std::string, std::vector<std::size_t>> by_id;
  for (const auto& r : records) {
    ReportRow row = classify_record(r, default_mode);
    for (const auto& v : row.violations)
      report.failures.push_back("line " + std::to_string(r.source_line) + ": " + v);
    if (r.id) by_id[*r.id].push_back(report.rows.size());
    report.rows.push_back(std::move(row));
  }
  report.admissible_count = report.rows.size();

  for (const auto& [id, idx] : by_id) {
    std::optional<std::size_t> first;
    for (auto i : idx) {
      const auto& row = report.rows[i];
      if (!row.kappa) continue;
      if (!first) {
        first = i;
        continue;
      }
      const auto& ref = report.rows[*first];
      if (*row.kappa != *ref.kappa)
        report.failures.push_back("cross-presentation mismatch for id " + id + ": line " +
                                  std::to_string(ref.source_line) + " gives kappa=" +
                                  ref.kappa->to_string() + ", line " +
                                  std::to_string(row.source_line) + " gives kappa=" +
                                  row.kappa->to_string());
    }
  }
  return report;
}

std::vector<ReportRow> report_rows(const EnumerationReport& report) {
  if (report.records.empty()) return report.rows;
  std::vector<ReportRow> rows;
  rows.reserve(report.records.size());
  for (const auto& r : report.records) {
    DatasetRecord rec;
    rec.payload = r.data;
    ReportRow row;
    row.kind = to_string(RecordKind::Fibration);
    row.inputs = format_inputs(rec);
    const std::int64_t n = r.data.singular_count();
    row.chi = n;
    row.sigma = r.sigma;
    row.k_squared = r.k_squared;
    row.chi_h = Rational(checked::add(n, r.sigma), 4);
    row.kappa = r.verdict.dim;
    row.provenance = r.verdict.provenance.to_string();
    row.notes = r.verdict.notes;
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace lefkappa
