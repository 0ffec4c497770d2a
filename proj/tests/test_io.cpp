#include "doctest.h"

#include <cstdio>
#include <fstream>

#include "dsmale/error.hpp"
#include "dsmale/io.hpp"

using namespace dsmale;

TEST_CASE("text coefficient format") {
    const auto p = parse_polynomial_text("0\n1\n0\n0\n0\n0\n0\n1\n");
    CHECK(p.numeric.degree() == 7);
    CHECK(p.numeric.coeffs()[1] == std::complex<double>(1, 0));
    CHECK(p.numeric.coeffs()[7] == std::complex<double>(1, 0));
    REQUIRE(p.exact.has_value());

    const auto q = parse_polynomial_text("# z - 3 z^2\n0 0\n\n1 0   # linear\n-3 0\n");
    CHECK(q.numeric.degree() == 2);
    CHECK(q.numeric.coeffs()[2] == std::complex<double>(-3, 0));
    CHECK(q.exact.has_value());

    const auto r = parse_polynomial_text("0\n1\n1/3 -2/5\n");
    REQUIRE(r.exact.has_value());
    CHECK(r.numeric.coeffs()[2].real() == doctest::Approx(1.0 / 3));
    CHECK(r.numeric.coeffs()[2].imag() == doctest::Approx(-0.4));

    const auto d = parse_polynomial_text("0\n1\n0.25 1e-3\n");
    CHECK_FALSE(d.exact.has_value());
    CHECK(d.numeric.coeffs()[2].imag() == doctest::Approx(1e-3));
}

TEST_CASE("parse errors carry the line number") {
    try {
        parse_polynomial_text("0\n1\nabc\n");
        FAIL("expected InputParseError");
    } catch (const InputParseError& e) {
        CHECK(e.line_number == 3);
    }
    CHECK_THROWS_AS(parse_polynomial_text(""), InputParseError);
    CHECK_THROWS_AS(parse_polynomial_text("1 2 3\n"), InputParseError);
    CHECK_THROWS_AS(parse_polynomial_text("[1, 2"), InputParseError);
    CHECK_THROWS_AS(parse_polynomial_text("[1, {}]"), InputParseError);
    CHECK_THROWS_AS(load_polynomial("/nonexistent/poly.txt"), InputParseError);
}

TEST_CASE("JSON array format") {
    const auto p = parse_polynomial_text("[0, 1, [\"1/7\", 0], [0.5, -0.5]]");
    CHECK(p.numeric.degree() == 3);
    CHECK(p.numeric.coeffs()[2].real() == doctest::Approx(1.0 / 7));
    CHECK(p.numeric.coeffs()[3] == std::complex<double>(0.5, -0.5));
    CHECK_FALSE(p.exact.has_value());
    CHECK(parse_polynomial_text("[0, 1, \"1/7\"]").exact.has_value());
}

TEST_CASE("load_polynomial reads a file") {
    const std::string path = "test_io_poly.txt";
    {
        std::ofstream f(path);
        f << "0\n1\n0\n-1/2\n";
    }
    const auto p = load_polynomial(path);
    CHECK(p.numeric.degree() == 3);
    std::remove(path.c_str());
}

TEST_CASE("metrics report fields") {
    const auto p = parse_polynomial_text("0\n1\n-1/4\n");
    const Json j = to_json(metrics(p.numeric));
    for (const char* k : {"T", "S", "alpha", "lambda", "critical_points"}) CHECK(j.contains(k));
    CHECK(j["T"].get<double>() == doctest::Approx(0.5));
    REQUIRE(j["critical_points"].size() == 1);
    const auto& c = j["critical_points"][0];
    CHECK(c["re"].get<double>() == doctest::Approx(2.0));
    CHECK(c["im"].get<double>() == doctest::Approx(0.0));
    CHECK(c["multiplicity"].get<int>() == 1);
    CHECK(c["ratio_abs"].get<double>() == doctest::Approx(0.5));
}

TEST_CASE("reports are deterministic and versioned") {
    const auto run = [] {
        return make_report("sample-check", {{"conjecture", to_json(conjecture_sample_check(3, 50, 5))}}).dump(2);
    };
    const std::string a = run(), b = run();
    CHECK(a == b);
    const Json j = Json::parse(a);
    CHECK(j["schema"] == kReportSchema);
    CHECK(j["command"] == "sample-check");
    CHECK(j.begin().key() == "schema");
    const std::string text = to_text(j);
    CHECK(text.find("command: sample-check") != std::string::npos);
}

TEST_CASE("exact metrics and CSV") {
    const Json e = to_json(extremal_g1_metrics(ExactComplex(QSqrt3(1))));
    CHECK(e["T_squared"] == "1/49");
    CHECK(e["S_squared"] == "1/49");
    const ScanResult r = grid_scan(8);
    const std::string csv = local_minima_csv(r);
    CHECK(csv.rfind("phi1,phi2,phi3,phi4,phi5,value\n", 0) == 0);
    std::size_t lines = 0;
    for (char ch : csv) lines += ch == '\n';
    CHECK(lines == r.local_minima.size() + 1);
}
