#include "doctest.h"

#include <cmath>
#include <random>

#include "dsmale/roots.hpp"
#include "dsmale/smale_metrics.hpp"

using namespace dsmale;
using cplx = std::complex<double>;

TEST_CASE("roots of 1 + 7 z^6 all have modulus 7^(-1/6)") {
    const RootSet rs = find_roots(ComplexPolynomial({1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 7.0}));
    CHECK(rs.roots.size() == 6);
    CHECK(rs.total_multiplicity() == 6);
    const double r = std::pow(7.0, -1.0 / 6.0);
    for (const auto& x : rs.roots) {
        CHECK(x.multiplicity == 1);
        CHECK(std::abs(std::abs(x.value) - r) < 1e-13);
        CHECK(std::abs(1.0 + 7.0 * std::pow(x.value, 6)) < 1e-12);
    }
}

TEST_CASE("(1 - z)^6 has the single root 1 of multiplicity 6") {
    const ComplexPolynomial p = to_numeric(extremal_g1(ExactComplex(1)).derivative());
    const RootSet rs = find_roots(p);
    REQUIRE(rs.roots.size() == 1);
    CHECK(rs.roots[0].multiplicity == 6);
    CHECK(std::abs(rs.roots[0].value - 1.0) < 1e-10);
}

TEST_CASE("z^2 - 1") {
    const RootSet rs = find_roots(ComplexPolynomial({-1.0, 0.0, 1.0}));
    REQUIRE(rs.roots.size() == 2);
    CHECK(std::abs(rs.roots[0].value + 1.0) < 1e-14);
    CHECK(std::abs(rs.roots[1].value - 1.0) < 1e-14);
    CHECK(rs.roots[0].multiplicity == 1);
    CHECK(rs.roots[1].multiplicity == 1);
}

TEST_CASE("zero roots are factored out exactly") {
    const RootSet rs = find_roots(ComplexPolynomial({0.0, 0.0, 0.0, 2.0, 1.0}));
    CHECK(rs.total_multiplicity() == 4);
    bool found = false;
    for (const auto& r : rs.roots)
        if (r.value == cplx(0.0)) {
            found = true;
            CHECK(r.multiplicity == 3);
        }
    CHECK(found);
}

TEST_CASE("degenerate input") {
    CHECK_THROWS_AS(find_roots(ComplexPolynomial()), DegenerateInput);
    CHECK_THROWS_AS(find_roots(ComplexPolynomial({3.0})), DegenerateInput);
}

TEST_CASE("a mixed-multiplicity cluster") {
    // (z - 2)^3 (z + i)^2 (z - 0.5)
    const ComplexPolynomial p = from_roots(1.0, {{2.0, 3}, {cplx(0, -1), 2}, {0.5, 1}});
    const RootSet rs = find_roots(p);
    CHECK(rs.total_multiplicity() == 6);
    CHECK(rs.roots.size() == 3);
    for (const auto& r : rs.roots) {
        if (std::abs(r.value - 2.0) < 1e-3) CHECK(r.multiplicity == 3);
        if (std::abs(r.value - cplx(0, -1)) < 1e-3) CHECK(r.multiplicity == 2);
        if (std::abs(r.value - 0.5) < 1e-3) CHECK(r.multiplicity == 1);
    }
}

TEST_CASE("companion fallback gives the same roots") {
    RootOptions opts;
    opts.force_companion = true;
    const ComplexPolynomial p({-6.0, 11.0, -6.0, 1.0});  // (z-1)(z-2)(z-3)
    const RootSet rs = find_roots(p, opts);
    CHECK(rs.method == RootMethod::Companion);
    REQUIRE(rs.roots.size() == 3);
    for (int k = 0; k < 3; ++k) CHECK(std::abs(rs.roots[static_cast<std::size_t>(k)].value - double(k + 1)) < 1e-10);
}

TEST_CASE("rebuilding from the roots reproduces random monic polynomials") {
    std::mt19937_64 rng(2024);
    std::normal_distribution<double> n(0.0, 1.0);
    for (int deg = 1; deg <= 8; ++deg) {
        for (int s = 0; s < 25; ++s) {
            std::vector<cplx> c(static_cast<std::size_t>(deg) + 1);
            for (auto& x : c) x = {n(rng), n(rng)};
            c.back() = 1.0;
            const ComplexPolynomial p(c);
            const RootSet rs = find_roots(p);
            CHECK(rs.total_multiplicity() == deg);
            const ComplexPolynomial q = from_roots(1.0, rs.roots);
            double scale = 0.0;
            for (const auto& x : c) scale = std::max(scale, std::abs(x));
            for (int k = 0; k <= deg; ++k) {
                const auto kk = static_cast<std::size_t>(k);
                CHECK(std::abs(q[kk] - p[kk]) <= 10.0 * rs.residual_bound * scale);
            }
            for (const auto& r : rs.roots) {
                double mag = 0.0;
                for (std::size_t k = 0; k < c.size(); ++k) mag += std::abs(c[k]) * std::pow(std::abs(r.value), double(k));
                if (r.multiplicity == 1) CHECK(std::abs(p(r.value)) <= rs.residual_bound * mag * 1.0000001);
            }
        }
    }
}

TEST_CASE("derivative roots count deg - 1 with multiplicity") {
    std::mt19937_64 rng(99);
    for (int n = 2; n <= 7; ++n) {
        for (int s = 0; s < 30; ++s) {
            const ComplexPolynomial f = random_class_polynomial(n, rng);
            CHECK(find_roots(f.derivative()).total_multiplicity() == n - 1);
        }
    }
}
