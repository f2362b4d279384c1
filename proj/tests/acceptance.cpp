// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "lefkappa/classify.hpp"
#include "lefkappa/cli.hpp"
#include "lefkappa/dataset.hpp"
#include "lefkappa/enumerate.hpp"
#include "lefkappa/error.hpp"
#include "lefkappa/hyperelliptic.hpp"
#include "lefkappa/invariants.hpp"
#include "lefkappa/lefschetz.hpp"
#include "lefkappa/pencil.hpp"

using namespace lefkappa;

namespace {

class Criterion {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok && problems_.size() < 5) problems_.push_back(what);
    if (!ok) ++failures_;
  }
  bool passed() const { return failures_ == 0; }
  const std::vector<std::string>& problems() const { return problems_; }
  std::size_t failures() const { return failures_; }

 private:
  std::vector<std::string> problems_;
  std::size_t failures_ = 0;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::int64_t vanishing_total(const FibrationData& d) {
  std::int64_t n = d.nonseparating;
  for (auto s : d.separating) n += s;
  return n;
}

// Every (a, s) with a + sum(s) == n for genus g.
void for_each_split(std::int64_t g, std::int64_t n,
                    const std::function<void(const FibrationData&)>& fn) {
  const auto width = static_cast<std::size_t>(g / 2);
  std::vector<std::int64_t> s(width, 0);
  std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t i, std::int64_t left) {
    if (i == width) {
      auto d = FibrationData::make(g, 1, left, s);
      d.hyperelliptic = true;
      fn(d);
      return;
    }
    for (std::int64_t v = 0; v <= left; ++v) {
      s[i] = v;
      rec(i + 1, left - v);
    }
    s[i] = 0;
  };
  rec(0, n);
}

// 1. Definition table on the eleven boundary triples.
void definition_table(Criterion& c) {
  const auto parsed = parse_dataset(slurp(LEFKAPPA_SAMPLE_DATA "/def-table.txt"));
  c.expect(parsed.ok() && parsed.records.size() == 11, "def-table parses to 11 records");
  const std::vector<std::string> expected{"-inf", "-inf", "0", "1", "1", "1",
                                          "1",    "2",    "2", "2", "2"};
  for (std::size_t i = 0; i < parsed.records.size() && i < expected.size(); ++i) {
    const auto& t = std::get<Triple>(parsed.records[i].payload);
    const auto row = classify_record(parsed.records[i], ConventionMode::EulerConsistent);
    const std::string label = "(" + std::to_string(t.g) + "," + std::to_string(t.h) + "," +
                              std::to_string(t.n) + ")";
    c.expect(row.kappa && row.kappa->to_string() == expected[i], label + " kappa");
    c.expect(row.violations.empty(), label + " has no violations");
    const bool conjectural = t.g == 3 && t.h == 1 && t.n == 7;
    c.expect((row.provenance == "conjectural") == conjectural, label + " provenance");
    const auto v = kappa_lefschetz(t.g, t.h, t.n);
    c.expect((v.provenance.kind == Provenance::Kind::Conjectural) == conjectural,
             label + " table provenance");
  }
}

// 2. Endo fixture with equality in the slope inequality and the signature bound.
void endo_fixture(Criterion& c) {
  auto d = FibrationData::make(2, 1, 20, {0});
  d.hyperelliptic = true;
  const auto sigma = endo_signature(d);
  c.expect(sigma == -12, "sigma = -12");
  const auto k2 = hyperelliptic_k_squared(d);
  c.expect(k2 == 4, "K^2 = 4");
  const auto inv = compute_invariants(20, sigma);
  c.expect(inv.k_squared() == 4, "K^2 = 2 chi + 3 sigma = 4");
  c.expect(inv.chi_h() == Rational(2), "chi_h = 2");
  c.expect(xiao_slack(2, 1, k2, inv.chi_h()) == Rational(0), "slope inequality is an equality");
  // (4 - 4/g) chi_h with g = 2 is 2 * 2 = 4.
  c.expect(Rational(k2) == (Rational(4) - Rational(4, 2)) * inv.chi_h(), "K^2 = (4-4/g) chi_h");
  c.expect(signature_lower_bound(2, 20) == Rational(-12), "bound -(3/5) 20 = -12");
  c.expect(Rational(sigma) == Rational(-3, 5) * Rational(20), "sigma meets the bound");
}

// 3. Genus 2, n <= 3: a single admissible datum with n >= 1.
void brute_force_minimality(Criterion& c) {
  const auto report = enumerate_hyperelliptic(2, 2, 3);
  c.expect(report.ok(), "no failures");
  std::vector<EnumeratedRecord> positive;
  for (const auto& r : report.records)
    if (vanishing_total(r.data) >= 1) positive.push_back(r);
  c.expect(positive.size() == 1, "exactly one admissible record with n in [1,3]");
  if (positive.size() == 1) {
    const auto& r = positive[0];
    c.expect(r.data.nonseparating == 1 && r.data.separating == std::vector<std::int64_t>{2},
             "record is a=1 s=(2)");
    c.expect(r.sigma == -1, "sigma = -1");
    c.expect(r.k_squared == 3, "K^2 = 3");
    c.expect(r.verdict.dim == KodairaDim::two(), "verdict 2");
  }
  // Independent check of the integrality criterion 3a + s1 = 0 mod 5.
  int count = 0;
  for (int a = 0; a <= 3; ++a)
    for (int s = 0; a + s <= 3; ++s)
      if (a + s >= 1 && (3 * a + s) % 5 == 0) ++count;
  c.expect(count == 1, "mod-5 count agrees");
}

// 4. Positivity and dual-path agreement on g in [2,7], n in [0,15].
void positivity_grid(Criterion& c) {
  const auto report = enumerate_hyperelliptic(2, 7, 15, {kDefaultCandidateLimit, 4});
  c.expect(report.ok(), "enumeration reports no failures");
  for (const auto& f : report.failures) c.expect(false, f);
  c.expect(report.visited == candidate_count(EnumerationParams{2, 7, 15}), "visited everything");
  for (const auto& r : report.records) {
    const auto n = vanishing_total(r.data);
    const auto label = "g=" + std::to_string(r.data.g) + " n=" + std::to_string(n);
    c.expect(hyperelliptic_k_squared(r.data) == 3 * endo_signature(r.data) + 2 * n,
             label + " dual path");
    if (n > 0) c.expect(r.k_squared > 0, label + " K^2 > 0");
  }
  c.expect(report.admissible_count > 0, "grid is not empty");
}

// 5. Subadditivity sweep.
void subadditivity_sweep(Criterion& c) {
  for (std::int64_t g = 0; g <= 8; ++g)
    for (std::int64_t h = 1; h <= 8; ++h)
      for (std::int64_t n = 0; n <= 40; ++n) {
        const auto k = kappa_lefschetz(g, h, n).dim;
        const bool ok = ExtendedInt::of(k) >= surface_kappa(g) + surface_kappa(h);
        c.expect(ok && subadditivity_holds(k, g, h),
                 "(" + std::to_string(g) + "," + std::to_string(h) + "," + std::to_string(n) + ")");
      }
}

// 6. Obstruction soundness over all flag combinations.
void obstruction_soundness(Criterion& c) {
  std::size_t hyperelliptic_cases = 0;
  for (std::int64_t g = 2; g <= 6; ++g)
    for (std::int64_t n = 1; n <= 36; ++n)
      for (int flags = 0; flags < 8; ++flags) {
        const bool spin = flags & 1, complex = flags & 2, hyper = flags & 4;
        std::vector<FibrationData> data;
        if (hyper) {
          for_each_split(g, n, [&](const FibrationData& d) {
            if (endo_signature_exact(d).is_integer()) data.push_back(d);
          });
        } else {
          data.push_back(FibrationData::make(g, 1, n));
        }
        for (auto d : data) {
          d.spin = spin;
          d.complex = complex;
          d.hyperelliptic = hyper;
          if (hyper) ++hyperelliptic_cases;
          const auto label = "g=" + std::to_string(g) + " n=" + std::to_string(n) +
                             " flags=" + std::to_string(flags);
          const auto rep = conjecture_obstructions(d);
          c.expect(!rep.contradictory(), label + " contradiction");
          for (const auto& f : rep.fired)
            c.expect(f.conclusion == KodairaDim::two(), label + " " + f.name + " concludes 2");
          const bool all_fail = n % 3 == 0 && !(spin && n % 24 != 0) && !(complex && n % 12 != 0);
          if (rep.undetermined) c.expect(all_fail && !hyper, label + " undetermined too early");
          c.expect(rep.undetermined == rep.fired.empty(), label + " undetermined iff none fired");
          c.expect(rep.undetermined == (all_fail && !hyper), label + " undetermined exactly");
        }
      }
  c.expect(hyperelliptic_cases > 0, "hyperelliptic cases were exercised");
}

// Blow-up Euler identity: chi(X) + A = chi(S^2) chi(F) + B.
bool euler_identity(std::int64_t k, std::int64_t A, std::int64_t B, std::int64_t chi) {
  return chi + A == 2 * (2 - 2 * k) + B;
}

// 7. Pencil oracle and the two conventions.
void pencil_oracle(Criterion& c) {
  std::size_t generated = 0, consistent = 0;
  for (std::int64_t k = 0; k <= 12; ++k)
    for (std::int64_t A = 1; A <= 40; ++A)
      for (std::int64_t chi = -20; chi <= 60; ++chi) {
        const auto kdh = canonical_dot_h(k, A);
        if (chi + A - 4 + 4 * k < 0) continue;  // no pencil with a negative singular count
        ++generated;
        const auto B = singular_fiber_count(chi, A, kdh, ConventionMode::EulerConsistent);
        const PencilData p{k, A, B.value, chi, 0, kdh};
        if (pencil_consistency(p) && euler_identity(k, A, B.value, chi)) ++consistent;
      }
  c.expect(generated > 0 && consistent == generated, "Euler convention consistent on all data");

  struct Fixture {
    const char* name;
    std::int64_t k, A, B, chi, literal;
  };
  for (const auto& f : {Fixture{"line pencil", 0, 1, 0, 3, -2}, Fixture{"cubic pencil", 1, 9, 12, 3, -6}}) {
    c.expect(euler_identity(f.k, f.A, f.B, f.chi), std::string(f.name) + " satisfies the oracle");
    const auto kdh = canonical_dot_h(f.k, f.A);
    const auto euler = singular_fiber_count(f.chi, f.A, kdh, ConventionMode::EulerConsistent);
    c.expect(euler.value == f.B, std::string(f.name) + " Euler count");
    try {
      singular_fiber_count(f.chi, f.A, kdh, ConventionMode::PaperLiteral);
      c.expect(false, std::string(f.name) + " literal count should be negative");
    } catch (const Error& e) {
      c.expect(e.code() == ErrorCode::NegativeCount && e.value() == Rational(f.literal),
               std::string(f.name) + " literal count " + std::to_string(f.literal));
    }
    const PencilData literal{f.k, f.A, f.literal, f.chi, 1, kdh};
    c.expect(!pencil_consistency(literal), std::string(f.name) + " literal fails the oracle");
  }

  const auto euler = fibration_to_pencil_genus(1, 0, 24, 4, 36, ConventionMode::EulerConsistent);
  const auto literal = fibration_to_pencil_genus(1, 0, 24, 4, 36, ConventionMode::PaperLiteral);
  c.expect(euler.value == 3, "conversion gives k=3 in Euler convention");
  c.expect(literal.value == 5, "conversion gives k=5 in literal convention");
  c.expect(euler_identity(euler.value, 4, 36, 24), "k=3 satisfies the oracle");
  c.expect(!euler_identity(literal.value, 4, 36, 24), "k=5 fails the oracle");
}

// 8. Combinatorial Kodaira dimension of the torsion-canonical fixture.
void pencil_kappa(Criterion& c) {
  c.expect(kappa_pencil(3, 4, 24, -16) == KodairaDim::zero(), "kappa^p = 0");
  c.expect(enriques_class_kappa(2) == std::vector<KodairaDim>{KodairaDim::zero()},
           "class 2 has kappa 0");
  c.expect(kappa0_pencil_constraints(3, 4, 36, 24).empty(), "kappa-0 constraints hold");
}

int run_tool(const std::vector<std::string>& args, std::string& out) {
  std::ostringstream o, e;
  const int status = run_cli(args, o, e);
  out = o.str();
  return status;
}

// 9. Parser round trip, error recovery and byte-identical enumeration.
void parser_emitter(Criterion& c) {
  const auto first = parse_dataset(slurp(LEFKAPPA_TEST_DATA "/corpus.txt"));
  c.expect(first.ok() && first.records.size() == 50, "corpus has 50 valid records");
  bool kinds[4] = {}, hyper = false, spin = false, complex = false, nonminimal = false,
       kdh = false, mode = false, id = false;
  std::string once;
  for (const auto& r : first.records) {
    kinds[static_cast<int>(r.kind())] = true;
    id |= r.id.has_value();
    if (auto* f = std::get_if<FibrationData>(&r.payload)) {
      hyper |= f->hyperelliptic;
      spin |= f->spin;
      complex |= f->complex;
      nonminimal |= !f->minimal;
    }
    if (auto* p = std::get_if<PencilEntry>(&r.payload)) {
      kdh |= p->k_dot_h_given;
      mode |= p->mode.has_value();
      nonminimal |= !p->minimal;
    }
    once += format_record(r) + "\n";
  }
  c.expect(kinds[0] && kinds[1] && kinds[2] && kinds[3], "corpus covers every kind");
  c.expect(hyper && spin && complex && nonminimal && kdh && mode && id, "corpus covers every flag");
  const auto second = parse_dataset(once);
  std::string twice;
  for (const auto& r : second.records) twice += format_record(r) + "\n";
  c.expect(second.ok() && second.records == first.records, "canonical form reparses equal");
  c.expect(once == twice, "canonicalization is idempotent");

  const auto bad = parse_dataset(slurp(LEFKAPPA_TEST_DATA "/malformed.txt"));
  c.expect(bad.diagnostics.size() == 4, "one diagnostic per malformed line");
  c.expect(bad.records.size() == 3, "all valid records kept");

  const std::vector<std::string> base{"enumerate", "--g-min", "2", "--g-max",
                                      "6",         "--n-max", "9", "--format", "json"};
  std::string a, b, w;
  const int sa = run_tool(base, a);
  const int sb = run_tool(base, b);
  auto parallel = base;
  parallel.insert(parallel.end(), {"--workers", "5"});
  const int sw = run_tool(parallel, w);
  c.expect(sa == kExitOk && sb == kExitOk && sw == kExitOk, "enumerate exits 0");
  c.expect(!a.empty() && a == b, "two runs are byte-identical");
  c.expect(a == w, "worker count does not change the output");
}

}  // namespace

int main() {
  struct Entry {
    const char* name;
    void (*fn)(Criterion&);
  };
  const Entry criteria[] = {
      {"definition table", definition_table},
      {"signature fixture and slope equality", endo_fixture},
      {"brute-force minimality", brute_force_minimality},
      {"positivity and dual path", positivity_grid},
      {"subadditivity sweep", subadditivity_sweep},
      {"obstruction soundness", obstruction_soundness},
      {"pencil oracle", pencil_oracle},
      {"pencil Kodaira dimension", pencil_kappa},
      {"parser and emitter", parser_emitter},
  };
  int failed = 0;
  int index = 0;
  for (const auto& entry : criteria) {
    ++index;
    Criterion c;
    try {
      entry.fn(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    std::cout << (c.passed() ? "PASS" : "FAIL") << " " << index << " " << entry.name << "\n";
    if (!c.passed()) {
      ++failed;
      for (const auto& p : c.problems()) std::cout << "    " << p << "\n";
      if (c.failures() > c.problems().size())
        std::cout << "    ... " << c.failures() - c.problems().size() << " more\n";
    }
  }
  return failed == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
