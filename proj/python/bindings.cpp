#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "lefkappa/classify.hpp"
#include "lefkappa/cli.hpp"
#include "lefkappa/dataset.hpp"
#include "lefkappa/enumerate.hpp"
#include "lefkappa/error.hpp"
#include "lefkappa/hyperelliptic.hpp"
#include "lefkappa/invariants.hpp"
#include "lefkappa/lefschetz.hpp"
#include "lefkappa/pencil.hpp"
#include "lefkappa/report.hpp"

namespace py = pybind11;
using namespace lefkappa;

namespace {

ConventionMode mode_from(const std::string& name) {
  auto m = parse_convention_mode(name);
  if (!m) throw Error(ErrorCode::InvalidArgument, "unknown mode '" + name + "'");
  return *m;
}

OutputFormat format_from(const std::string& name) {
  if (name == "json") return OutputFormat::Json;
  if (name == "text") return OutputFormat::Text;
  throw Error(ErrorCode::InvalidArgument, "unknown format '" + name + "'");
}

FibrationData hyperelliptic_datum(std::int64_t g, std::int64_t a, std::vector<std::int64_t> s) {
  auto d = FibrationData::make(g, 1, a, std::move(s));
  d.hyperelliptic = true;
  return d;
}

py::tuple fraction(const Rational& r) { return py::make_tuple(r.numerator(), r.denominator()); }

py::tuple verdict(const KodairaVerdict& v) {
  return py::make_tuple(v.dim.to_string(), v.provenance.to_string(), v.notes);
}

std::vector<ReportRow> rows_for(const std::string& text, const std::string& mode,
                                ReportRow (*fn)(const DatasetRecord&, ConventionMode)) {
  const auto parsed = parse_dataset(text);
  if (!parsed.ok())
    throw Error(ErrorCode::InvalidArgument, parsed.diagnostics.front().to_string());
  std::vector<ReportRow> rows;
  for (const auto& r : parsed.records) rows.push_back(fn(r, mode_from(mode)));
  return rows;
}

}  // namespace

PYBIND11_MODULE(_lefkappa, m) {
  m.doc() = "Kodaira dimensions and invariants of Lefschetz fibrations and pencils";

  PYBIND11_CONSTINIT static py::gil_safe_call_once_and_store<py::object> error_type;
  error_type.call_once_and_store_result([&]() {
    return py::object(py::exception<Error>(m, "LefkappaError", PyExc_ValueError));
  });
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      const py::object& type = error_type.get_stored();
      py::object exc = type(e.what());
      exc.attr("code") = to_string(e.code());
      exc.attr("value") = e.value() ? py::object(fraction(*e.value())) : py::none();
      PyErr_SetObject(type.ptr(), exc.ptr());
    }
  });

  m.def("invariants", [](std::int64_t chi, std::int64_t sigma) {
    const auto inv = compute_invariants(chi, sigma);
    py::dict d;
    d["chi"] = inv.chi();
    d["sigma"] = inv.sigma();
    d["k_squared"] = inv.k_squared();
    d["chi_h"] = fraction(inv.chi_h());
    d["almost_complex"] = inv.almost_complex_admissible();
    return d;
  }, py::arg("chi"), py::arg("sigma"));

  m.def("kappa_lefschetz", [](std::int64_t g, std::int64_t h, std::int64_t n) {
    return verdict(kappa_lefschetz(g, h, n));
  }, py::arg("g"), py::arg("h"), py::arg("n"));

  m.def("endo_signature", [](std::int64_t g, std::int64_t a, std::vector<std::int64_t> s) {
    return fraction(endo_signature_exact(hyperelliptic_datum(g, a, std::move(s))));
  }, py::arg("g"), py::arg("a"), py::arg("s") = std::vector<std::int64_t>{});

  m.def("hyperelliptic_k_squared", [](std::int64_t g, std::int64_t a, std::vector<std::int64_t> s) {
    return hyperelliptic_k_squared(hyperelliptic_datum(g, a, std::move(s)));
  }, py::arg("g"), py::arg("a"), py::arg("s") = std::vector<std::int64_t>{});

  m.def("prop_he_verdict", [](std::int64_t g, std::int64_t a, std::vector<std::int64_t> s) {
    return verdict(prop_he_verdict(hyperelliptic_datum(g, a, std::move(s))));
  }, py::arg("g"), py::arg("a"), py::arg("s") = std::vector<std::int64_t>{});

  m.def("pencil_genus", &pencil_genus, py::arg("A"), py::arg("k_dot_h"));

  m.def("singular_fiber_count",
        [](std::int64_t chi, std::int64_t A, std::int64_t kdh, const std::string& mode) {
          return singular_fiber_count(chi, A, kdh, mode_from(mode)).value;
        },
        py::arg("chi"), py::arg("A"), py::arg("k_dot_h"), py::arg("mode") = "euler");

  m.def("kappa_pencil", [](std::int64_t k, std::int64_t A, std::int64_t chi, std::int64_t sigma) {
    return kappa_pencil(k, A, chi, sigma).to_string();
  }, py::arg("k"), py::arg("A"), py::arg("chi"), py::arg("sigma"));

  m.def("fibration_to_pencil_genus",
        [](std::int64_t g, std::int64_t h, std::int64_t b_prime, std::int64_t A, std::int64_t B,
           const std::string& mode) {
          return fibration_to_pencil_genus(g, h, b_prime, A, B, mode_from(mode)).value;
        },
        py::arg("g"), py::arg("h"), py::arg("b_prime"), py::arg("A"), py::arg("B"),
        py::arg("mode") = "euler");

  m.def("kappa0_pencil_constraints", &kappa0_pencil_constraints, py::arg("k"), py::arg("A"),
        py::arg("B"), py::arg("chi"));

  m.def("canonicalize", [](const std::string& text) {
    const auto parsed = parse_dataset(text);
    std::vector<std::string> lines;
    for (const auto& r : parsed.records) lines.push_back(format_record(r));
    std::vector<std::string> diagnostics;
    for (const auto& d : parsed.diagnostics) diagnostics.push_back(d.to_string());
    return py::make_tuple(lines, diagnostics);
  }, py::arg("text"));

  m.def("classify", [](const std::string& text, const std::string& mode, const std::string& format) {
    return emit_report(rows_for(text, mode, classify_record), format_from(format));
  }, py::arg("text"), py::arg("mode") = "euler", py::arg("format") = "json");

  m.def("enumerate_hyperelliptic",
        [](std::int64_t g_min, std::int64_t g_max, std::int64_t n_max, unsigned workers,
           std::uint64_t max_candidates, const std::string& format) {
          EnumerationReport report;
          {
            py::gil_scoped_release release;
            report = enumerate_hyperelliptic(g_min, g_max, n_max, {max_candidates, workers});
          }
          return emit_report(report, format_from(format));
        },
        py::arg("g_min"), py::arg("g_max"), py::arg("n_max"), py::arg("workers") = 1,
        py::arg("max_candidates") = kDefaultCandidateLimit, py::arg("format") = "json");

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int status = run_cli(args, out, err);
    return py::make_tuple(status, out.str(), err.str());
  }, py::arg("args"));
}
