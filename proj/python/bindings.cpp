#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dsmale/certificate.hpp"
#include "dsmale/error.hpp"
#include "dsmale/io.hpp"
#include "dsmale/optimizer.hpp"
#include "dsmale/roots.hpp"
#include "dsmale/smale_metrics.hpp"

namespace py = pybind11;
using namespace dsmale;

namespace {

py::object to_py(const Json& j) {
    if (j.is_null()) return py::none();
    if (j.is_boolean()) return py::bool_(j.get<bool>());
    if (j.is_number_integer()) return py::int_(j.get<long long>());
    if (j.is_number()) return py::float_(j.get<double>());
    if (j.is_string()) return py::str(j.get<std::string>());
    if (j.is_array()) {
        py::list l;
        for (const auto& e : j) l.append(to_py(e));
        return l;
    }
    py::dict d;
    for (const auto& [k, v] : j.items()) d[py::str(k)] = to_py(v);
    return d;
}

ComplexPolynomial poly(const std::vector<std::complex<double>>& c) { return ComplexPolynomial(c); }

ExactComplex exact_scale(const std::string& re, const std::string& im) {
    return {QSqrt3(parse_rational(re)), QSqrt3(parse_rational(im))};
}

}  // namespace

PYBIND11_MODULE(_dsmale, m) {
    m.doc() = "dual Smale problem: polynomial metrics, exact certificate checks and the torus scan";

    py::register_exception<Error>(m, "Error");
    py::register_exception<InputParseError>(m, "InputParseError", PyExc_ValueError);
    py::register_exception<NotInClass>(m, "NotInClass", PyExc_ValueError);
    py::register_exception<NonConvergence>(m, "NonConvergence", PyExc_RuntimeError);

    m.def(
        "find_roots",
        [](const std::vector<std::complex<double>>& c, double tol) {
            std::vector<std::pair<std::complex<double>, int>> out;
            for (const auto& r : find_roots(poly(c), tol).roots) out.emplace_back(r.value, r.multiplicity);
            return out;
        },
        py::arg("coeffs"), py::arg("tol") = 1e-12, "roots with multiplicities, coefficients constant term first");

    m.def(
        "metrics", [](const std::vector<std::complex<double>>& c, double tol) { return to_py(to_json(metrics(poly(c), tol))); },
        py::arg("coeffs"), py::arg("tol") = 1e-12, "T, S, alpha, lambda and the critical points");

    m.def(
        "parse_polynomial",
        [](const std::string& text) {
            const auto p = parse_polynomial_text(text);
            return py::make_tuple(p.numeric.coeffs(), p.exact.has_value());
        },
        py::arg("text"), "(coefficients, exact) from the text or JSON coefficient format");

    m.def(
        "extremal_g1", [](const std::string& re, const std::string& im) { return to_numeric(extremal_g1(exact_scale(re, im))).coeffs(); },
        py::arg("a_re") = "1", py::arg("a_im") = "0");
    m.def(
        "extremal_g23",
        [](int sign, const std::string& re, const std::string& im) {
            return to_numeric(extremal_g23(exact_scale(re, im), sign)).coeffs();
        },
        py::arg("sign"), py::arg("a_re") = "1", py::arg("a_im") = "0");
    m.def(
        "extremal_metrics",
        [](const std::string& which, const std::string& re, const std::string& im) {
            const ExactComplex a = exact_scale(re, im);
            if (which == "g1") return to_py(to_json(extremal_g1_metrics(a)));
            if (which == "g2") return to_py(to_json(extremal_g23_metrics(a, 1)));
            if (which == "g3") return to_py(to_json(extremal_g23_metrics(a, -1)));
            throw py::value_error("which must be g1, g2 or g3");
        },
        py::arg("which"), py::arg("a_re") = "1", py::arg("a_im") = "0", "exact squared metrics as strings");

    m.def("objective", [](const Angles& a) { return objective(a); }, py::arg("angles"));
    m.def(
        "grid_scan", [](int n, bool sym) { return to_py(to_json(grid_scan(n, sym))); }, py::arg("points_per_axis"),
        py::arg("use_symmetry") = true);
    m.def(
        "scan_and_refine", [](int n, double tol) { return to_py(to_json(scan_and_refine(n, tol))); },
        py::arg("points_per_axis") = 48, py::arg("tol") = 1e-12);
    m.def(
        "refine",
        [](const Angles& start, double tol) {
            const auto r = refine(start, tol);
            return py::make_tuple(r.angles, r.value);
        },
        py::arg("start"), py::arg("tol") = 1e-12);

    m.def(
        "verify_identity", [](std::uint64_t seed) { return to_py(to_json(verify_identity_id1(seed))); },
        py::arg("seed") = 20240607);
    m.def(
        "verify_lemma", [](std::uint64_t seed, int samples) { return to_py(to_json(verify_lemma1(seed, samples))); },
        py::arg("seed") = 20240607, py::arg("samples") = 1000);
    m.def(
        "verify_equality_cases",
        [](std::uint64_t seed, int samples) { return to_py(to_json(verify_equality_cases(build_g(), seed, samples))); },
        py::arg("seed") = 20240607, py::arg("samples") = 1000);
    m.def(
        "numeric_oracles", [](std::uint64_t seed, int samples) { return to_py(to_json(run_numeric_oracles(seed, samples))); },
        py::arg("seed") = 20240607, py::arg("samples") = 100);
    m.def(
        "conjecture_sample_check",
        [](int n, int samples, std::uint64_t seed) { return to_py(to_json(conjecture_sample_check(n, samples, seed))); },
        py::arg("n"), py::arg("samples") = 1000, py::arg("seed") = 20240607);
    m.def(
        "disc_bound_sample_check",
        [](int samples, std::uint64_t seed) { return to_py(to_json(disc_bound_sample_check(samples, seed))); },
        py::arg("samples") = 10000, py::arg("seed") = 20240607);
}
