#include "lefkappa/classify.hpp"

#include <functional>

#include "lefkappa/checked.hpp"
#include "lefkappa/error.hpp"
#include "lefkappa/hyperelliptic.hpp"
#include "lefkappa/invariants.hpp"
#include "lefkappa/lefschetz.hpp"

namespace lefkappa {

namespace {

ReportRow base_row(const DatasetRecord& r) {
  ReportRow row;
  row.id = r.id;
  row.kind = to_string(r.kind());
  row.inputs = format_inputs(r);
  row.source_line = r.source_line;
  return row;
}

// Runs `fn`, turning any library error into a violation on the row.
void guarded(ReportRow& row, const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    row.violations.emplace_back(e.what());
  }
}

void set_invariants(ReportRow& row, std::int64_t chi, std::optional<std::int64_t> sigma) {
  row.chi = chi;
  if (!sigma) return;
  const auto inv = compute_invariants(chi, *sigma);
  row.sigma = *sigma;
  row.k_squared = inv.k_squared();
  row.chi_h = inv.chi_h();
  if (!inv.almost_complex_admissible())
    row.notes.push_back("chi+sigma not divisible by 4");
}

// For a minimal manifold that is not rational or ruled, dimensions 0 and 1
// need K^2 = 0 and dimension 2 needs K^2 > 0.
void check_k_squared_sign(ReportRow& row) {
  if (!row.kappa || !row.k_squared || !row.kappa->is_finite()) return;
  const auto k2 = *row.k_squared;
  const bool ok = *row.kappa == KodairaDim::two() ? k2 > 0 : k2 == 0;
  if (!ok)
    row.violations.push_back("K^2=" + std::to_string(k2) + " inconsistent with kappa=" +
                             row.kappa->to_string());
}

void apply_verdict(ReportRow& row, const KodairaVerdict& v) {
  row.kappa = v.dim;
  row.provenance = v.provenance.to_string();
  row.notes.insert(row.notes.end(), v.notes.begin(), v.notes.end());
}

// sigma = 0 for surface bundles over a positive-genus base whose base or
// fiber is a torus.
std::optional<std::int64_t> bundle_signature(std::int64_t g, std::int64_t h, std::int64_t n) {
  if (n == 0 && h >= 1 && (g == 1 || h == 1)) return 0;
  return std::nullopt;
}

std::string join(const std::vector<FiredObstruction>& fired) {
  std::string s;
  for (const auto& f : fired) {
    if (!s.empty()) s += ",";
    s += f.name;
  }
  return s;
}

void classify_fibration(ReportRow& row, const FibrationData& d, bool with_kappa) {
  const std::int64_t n = d.singular_count();
  const std::int64_t chi = euler_characteristic(d.g, d.h, n);

  std::optional<std::int64_t> sigma = bundle_signature(d.g, d.h, n);
  if (d.hyperelliptic && d.g >= 2 && d.h == 1) {
    guarded(row, [&] {
      sigma = endo_signature(d);
      const std::int64_t k2 = hyperelliptic_k_squared(d);
      if (k2 != checked::add(checked::mul(3, *sigma), checked::mul(2, n)))
        row.violations.push_back("K^2 expansion " + std::to_string(k2) +
                                 " disagrees with 3 sigma + 2 chi");
    });
  }
  set_invariants(row, chi, sigma);
  if (!with_kappa) return;

  if (d.h == 0) {
    guarded(row, [&] { (void)kappa_lefschetz(d.g, d.h, n); });
    return;
  }
  if (!d.minimal) {
    row.notes.push_back("non-minimal: kappa not computed");
    return;
  }
  KodairaVerdict v = kappa_lefschetz(d.g, d.h, n);
  if (d.g >= 2 && d.h == 1 && n >= 1) {
    guarded(row, [&] {
      const auto report = conjecture_obstructions(d);
      if (report.contradictory())
        row.violations.push_back("contradictory obstructions: " + join(report.fired));
      for (const auto& f : report.fired)
        if (f.conclusion != v.dim)
          row.violations.push_back("obstruction " + f.name + " concludes " +
                                   f.conclusion.to_string() + ", table gives " +
                                   v.dim.to_string());
      if (!report.fired.empty()) {
        v.notes.push_back("fired: " + join(report.fired));
        if (v.provenance.kind == Provenance::Kind::Conjectural)
          v.provenance = Provenance::forced(report.fired.front().name);
      } else {
        v.notes.push_back("no obstruction fires");
      }
    });
  }
  apply_verdict(row, v);
  if (!subadditivity_holds(v.dim, d.g, d.h))
    row.violations.push_back("subadditivity fails");
  check_k_squared_sign(row);
}

void classify_triple(ReportRow& row, const Triple& t, bool with_kappa) {
  const std::int64_t chi = euler_characteristic(t.g, t.h, t.n);
  set_invariants(row, chi, bundle_signature(t.g, t.h, t.n));
  if (!with_kappa) return;
  if (t.h == 0) {
    guarded(row, [&] { (void)kappa_lefschetz(t.g, t.h, t.n); });
    return;
  }
  KodairaVerdict v = kappa_lefschetz(t.g, t.h, t.n);
  // A bare triple carries no flags; only the mod-3 argument applies, and it
  // is reported without changing the provenance of the table value.
  if (t.g >= 2 && t.h == 1 && t.n >= 1 && t.n % 3 != 0)
    v.notes.push_back("mod3 obstruction fires");
  apply_verdict(row, v);
  if (!subadditivity_holds(v.dim, t.g, t.h))
    row.violations.push_back("subadditivity fails");
  check_k_squared_sign(row);
}

void classify_elliptic(ReportRow& row, const EllipticDescriptor& e, bool with_kappa) {
  const auto [chi, sigma] = elliptic_chi_sigma(e);
  set_invariants(row, chi, sigma);
  if (!with_kappa) return;
  row.kappa = elliptic_kappa(e);
  row.provenance = Provenance::proven().to_string();

  // Positive-genus bases are also covered by the fibration table.
  std::optional<KodairaVerdict> table;
  if (const auto* tb = std::get_if<TorusBundleOverGenus>(&e)) {
    if (tb->h >= 1) table = kappa_lefschetz(1, tb->h, 0);
  } else if (const auto& x = std::get<EnH>(e); x.h >= 1) {
    table = kappa_lefschetz(1, x.h, checked::mul(12, x.n));
  } else if (x.n == 1) {
    row.notes.push_back("rational, non-minimal");
  }
  if (table && table->dim != *row.kappa)
    row.violations.push_back("elliptic classifier gives " + row.kappa->to_string() +
                             ", fibration table gives " + table->dim.to_string());
}

void classify_pencil(ReportRow& row, const PencilEntry& p, ConventionMode mode,
                     bool with_kappa) {
  const auto& d = p.data;
  row.mode = mode;
  set_invariants(row, d.chi, d.sigma);
  if (!with_kappa) return;

  guarded(row, [&] {
    const std::int64_t k = pencil_genus(d.A, d.k_dot_h);
    if (k != d.k)
      row.violations.push_back("fiber genus from A and K.h is " + std::to_string(k) +
                               ", record has k=" + std::to_string(d.k));
  });
  guarded(row, [&] {
    const auto b = singular_fiber_count(d.chi, d.A, d.k_dot_h, mode);
    if (b.value != d.B)
      row.violations.push_back("B=" + std::to_string(d.B) + " but " + to_string(mode) +
                               " count gives " + std::to_string(b.value));
  });
  if (mode == ConventionMode::EulerConsistent && !pencil_consistency(d))
    row.violations.push_back("blow-up Euler count fails: chi+A != 2(2-2k)+B");

  if (!p.minimal) {
    row.notes.push_back("non-minimal: kappa not computed");
    return;
  }
  guarded(row, [&] {
    row.kappa = kappa_pencil(d.k, d.A, d.chi, d.sigma);
    row.provenance = Provenance::definitional().to_string();
    row.notes.push_back("K.h=" + std::to_string(d.k_dot_h));
    if (*row.kappa == KodairaDim::zero())
      for (auto& c : kappa0_pencil_constraints(d.k, d.A, d.B, d.chi))
        row.violations.push_back("kappa=0 constraint: " + c);
  });
}

ReportRow evaluate(const DatasetRecord& record, ConventionMode default_mode, bool with_kappa) {
  ReportRow row = base_row(record);
  guarded(row, [&] {
    std::visit(
        [&](const auto& payload) {
          using T = std::decay_t<decltype(payload)>;
          if constexpr (std::is_same_v<T, FibrationData>) {
            classify_fibration(row, payload, with_kappa);
          } else if constexpr (std::is_same_v<T, Triple>) {
            classify_triple(row, payload, with_kappa);
          } else if constexpr (std::is_same_v<T, PencilEntry>) {
            classify_pencil(row, payload, payload.mode.value_or(default_mode), with_kappa);
          } else {
            classify_elliptic(row, payload, with_kappa);
          }
        },
        record.payload);
  });
  return row;
}

}  // namespace

ReportRow classify_record(const DatasetRecord& record, ConventionMode default_mode) {
  return evaluate(record, default_mode, true);
}

ReportRow invariants_record(const DatasetRecord& record, ConventionMode default_mode) {
  return evaluate(record, default_mode, false);
}

std::vector<ReportRow> convert_dataset(const std::vector<DatasetRecord>& records,
                                       ConventionMode default_mode) {
  std::vector<ReportRow> rows;
  rows.reserve(records.size());
  for (const auto& r : records) {
    ReportRow row = base_row(r);
    guarded(row, [&] {
      if (const auto* p = std::get_if<PencilEntry>(&r.payload)) {
        const auto mode = p->mode.value_or(default_mode);
        const auto& d = p->data;
        row.mode = mode;
        set_invariants(row, d.chi, d.sigma);
        row.notes.push_back("K.h=" + std::to_string(d.k_dot_h));
        guarded(row, [&] {
          row.notes.push_back("genus from A,K.h=" + std::to_string(pencil_genus(d.A, d.k_dot_h)));
        });
        guarded(row, [&] {
          const auto b = singular_fiber_count(d.chi, d.A, d.k_dot_h, mode);
          row.notes.push_back("B(" + to_string(mode) + ")=" + std::to_string(b.value));
          if (b.value != d.B)
            row.violations.push_back("B=" + std::to_string(d.B) + " but " + to_string(mode) +
                                     " count gives " + std::to_string(b.value));
        });
        return;
      }

      std::int64_t g = 0, h = 0, n = 0;
      if (const auto* f = std::get_if<FibrationData>(&r.payload)) {
        g = f->g, h = f->h, n = f->singular_count();
      } else if (const auto* t = std::get_if<Triple>(&r.payload)) {
        g = t->g, h = t->h, n = t->n;
      } else {
        row.notes.push_back("no conversion for elliptic descriptors");
        return;
      }
      const std::int64_t chi = euler_characteristic(g, h, n);
      row.chi = chi;
      bool matched = false;
      for (const auto& other : records) {
        const auto* p = std::get_if<PencilEntry>(&other.payload);
        if (!p || !r.id || other.id != r.id) continue;
        matched = true;
        const auto mode = p->mode.value_or(default_mode);
        row.mode = mode;
        const std::string where = "pencil line " + std::to_string(other.source_line);
        if (p->data.chi != chi)
          row.violations.push_back(where + " has chi=" + std::to_string(p->data.chi) +
                                   ", fibration gives " + std::to_string(chi));
        guarded(row, [&] {
          const auto k = fibration_to_pencil_genus(g, h, n, p->data.A, p->data.B, mode);
          row.notes.push_back(where + ": k=" + std::to_string(k.value) + " (" +
                              to_string(mode) + ")");
          if (k.value != p->data.k)
            row.violations.push_back(where + " has k=" + std::to_string(p->data.k) +
                                     ", conversion gives " + std::to_string(k.value));
        });
      }
      if (!matched) row.notes.push_back("no pencil shares this id");
    });
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace lefkappa
