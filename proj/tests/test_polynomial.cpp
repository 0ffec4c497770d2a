#include "doctest.h"

#include <cmath>
#include <random>

#include "dsmale/polynomial.hpp"
#include "dsmale/smale_metrics.hpp"

using namespace dsmale;
using cplx = std::complex<double>;

namespace {

// Naive power sum, independent of Horner.
cplx power_sum(const ComplexPolynomial& p, cplx z) {
    cplx s = 0.0;
    for (std::size_t k = 0; k < p.coeffs().size(); ++k) s += p.coeffs()[k] * std::pow(z, static_cast<double>(k));
    return s;
}

// Pascal's triangle row n.
std::vector<long> pascal(int n) {
    std::vector<long> row{1};
    for (int i = 0; i < n; ++i) {
        std::vector<long> next(row.size() + 1, 0);
        for (std::size_t k = 0; k < row.size(); ++k) {
            next[k] += row[k];
            next[k + 1] += row[k];
        }
        row = next;
    }
    return row;
}

ComplexPolynomial z_plus_cz7(cplx c) {
    std::vector<cplx> v(8, 0.0);
    v[1] = 1.0;
    v[7] = c;
    return ComplexPolynomial(v);
}

}  // namespace

TEST_CASE("trailing zeros are trimmed") {
    ComplexPolynomial p({0.0, 1.0, 0.0, 0.0});
    CHECK(p.degree() == 1);
    CHECK(p.coeffs().size() == 2);
    CHECK(ComplexPolynomial({0.0, 0.0}).is_zero());
    CHECK((p - p).is_zero());
}

TEST_CASE("eval examples") {
    const ComplexPolynomial z({0.0, 1.0});
    CHECK(z(cplx(5.0)) == cplx(5.0));

    const ExactPolynomial g1 = extremal_g1(ExactComplex(1));
    CHECK(g1(ExactComplex(1)) == ExactComplex(Rational(1, 7)));

    const ComplexPolynomial p = z_plus_cz7(1.0);
    const cplx v = p(cplx(0.5));
    CHECK(std::abs(v - (0.5 + std::pow(0.5, 7))) < 1e-15);
    CHECK(std::abs(v - power_sum(p, 0.5)) < 1e-15);
}

TEST_CASE("Horner agrees with the power sum on random input") {
    std::mt19937_64 rng(7);
    std::normal_distribution<double> n(0.0, 1.0);
    for (int s = 0; s < 50; ++s) {
        std::vector<cplx> c(9);
        for (auto& x : c) x = {n(rng), n(rng)};
        const ComplexPolynomial p(c);
        const cplx z(n(rng), n(rng));
        CHECK(std::abs(p(z) - power_sum(p, z)) <= 1e-12 * (1 + std::abs(power_sum(p, z))) * std::pow(1 + std::abs(z), 8));
    }
}

TEST_CASE("derivative examples") {
    CHECK(ComplexPolynomial({0.0, 1.0}).derivative() == ComplexPolynomial({1.0}));
    const cplx c(2.0, -1.0);
    const ComplexPolynomial d = z_plus_cz7(c).derivative();
    CHECK(d.degree() == 6);
    CHECK(d[0] == cplx(1.0));
    CHECK(d[6] == 7.0 * c);
    for (int k = 1; k < 6; ++k) CHECK(d[static_cast<std::size_t>(k)] == cplx(0.0));

    // (1/7)(1 - (1 - z)^7)' = (1 - z)^6, expanded with Pascal's row
    const ExactPolynomial dg = extremal_g1(ExactComplex(1)).derivative();
    const auto row = pascal(6);
    std::vector<ExactComplex> expect;
    for (int k = 0; k <= 6; ++k) expect.emplace_back(Rational((k % 2 ? -1 : 1) * row[static_cast<std::size_t>(k)]));
    CHECK(dg == ExactPolynomial(expect));
}

TEST_CASE("derivative drops the degree by one") {
    for (int n = 1; n <= 9; ++n) {
        std::vector<cplx> c(static_cast<std::size_t>(n) + 1, cplx(1.0, 0.5));
        CHECK(ComplexPolynomial(c).derivative().degree() == n - 1);
    }
}

TEST_CASE("rescale") {
    const ComplexPolynomial z({0.0, 1.0});
    CHECK(rescale(z, cplx(3.0, 4.0)) == z);
    CHECK_THROWS_AS(rescale(z, cplx(0.0)), ZeroScale);

    const ComplexPolynomial p = z_plus_cz7(1.0);
    const ComplexPolynomial q = rescale(p, cplx(2.0));
    CHECK(q[7] == cplx(64.0));
    CHECK(q[1] == cplx(1.0));
    for (cplx w : {cplx(0.3, 0.1), cplx(-1.2, 0.7), cplx(0.0, 2.0)}) {
        CHECK(std::abs(q(w) - p(2.0 * w) / 2.0) < 1e-12 * (1 + std::abs(q(w))));
    }

    std::mt19937_64 rng(11);
    for (int s = 0; s < 20; ++s) {
        const ComplexPolynomial f = random_class_polynomial(7, rng);
        const cplx a = random_in_disc(rng, 3.0) + cplx(0.1, 0.0);
        const ComplexPolynomial back = rescale(rescale(f, a), 1.0 / a);
        for (std::size_t k = 0; k <= 7; ++k) CHECK(std::abs(back[k] - f[k]) < 1e-10 * (1 + std::abs(f[k])));
        // derivative(rescale(f, a))(z) = f'(a z)
        const cplx z = random_in_disc(rng, 1.0);
        const cplx lhs = rescale(f, a).derivative()(z);
        const cplx rhs = f.derivative()(a * z);
        CHECK(std::abs(lhs - rhs) < 1e-9 * (1 + std::abs(rhs)));
    }
}

TEST_CASE("exact rescale keeps class membership") {
    const ExactPolynomial g = extremal_g1(ExactComplex(1));
    const ExactComplex a(QSqrt3(Rational(1, 2)), QSqrt3(Rational(0), Rational(1)));
    const ExactPolynomial r = rescale(g, a);
    CHECK(is_in_class(r, 7));
    CHECK(r == extremal_g1(a));
}

TEST_CASE("is_in_class") {
    std::vector<cplx> c(8, 0.0);
    c[1] = 1.0;
    c[7] = 3.0;
    CHECK(is_in_class(ComplexPolynomial(c), 7));
    CHECK_FALSE(is_in_class(ComplexPolynomial({0.0, 0.0, 1.0}), 7));
    CHECK_FALSE(is_in_class(ComplexPolynomial(c), 6));
    CHECK(is_in_class(extremal_g1(ExactComplex(1)), 7));
    CHECK_FALSE(is_in_class(ComplexPolynomial({0.5, 1.0, 1.0}), 2));
}
