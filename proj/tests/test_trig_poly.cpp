#include "doctest.h"

#include <cmath>
#include <random>

#include "dsmale/error.hpp"
#include "dsmale/trig_poly.hpp"

using namespace dsmale;

namespace {

const double kPi = std::acos(-1.0);

std::array<double, 5> random_angles(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0.0, 2 * kPi);
    return {u(rng), u(rng), u(rng), u(rng), u(rng)};
}

TrigPoly random_poly(std::mt19937_64& rng, int terms) {
    std::uniform_int_distribution<int> var(1, 5), kind(0, 2), coef(-9, 9);
    TrigPoly p(coef(rng));
    for (int t = 0; t < terms; ++t) {
        TrigPoly m(coef(rng));
        for (int f = 0; f < 3; ++f) {
            const int k = kind(rng);
            if (k == 0) m = m * TrigPoly::x(var(rng));
            if (k == 1) m = m * TrigPoly::y(var(rng));
        }
        p += m;
    }
    return p;
}

double rel(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

}  // namespace

TEST_CASE("named symbols") {
    CHECK(make(Symbol::D, 1) == TrigPoly(1) - TrigPoly::x(1));
    CHECK(make(Symbol::B, 3) == TrigPoly(1) - Rational(2) * TrigPoly::x(3));
    CHECK(make(Symbol::XDiff, 1, 2) == TrigPoly::x(1) - TrigPoly::x(2));
    CHECK(make(Symbol::YDiff, 4, 5) == TrigPoly::y(4) - TrigPoly::y(5));
    CHECK(make(Symbol::Constant, 7) == TrigPoly(7));
    CHECK(x_diff(1, 2).eval_at({0.7, 0.7, 0, 0, 0}) == 0.0);
    CHECK_THROWS_AS(make(Symbol::X, 6), BadIndex);
    CHECK_THROWS_AS(make(Symbol::Y, 0), BadIndex);
    CHECK_THROWS_AS(x_diff(2, 2), BadIndex);
    CHECK_THROWS_AS(y_diff(3, 3), BadIndex);
}

TEST_CASE("products are reduced with y^2 = 1 - x^2") {
    const TrigPoly y1 = TrigPoly::y(1), y2 = TrigPoly::y(2);
    const TrigPoly x1 = TrigPoly::x(1), x2 = TrigPoly::x(2);
    CHECK(y1 * y1 == TrigPoly(1) - x1 * x1);
    const TrigPoly lhs = (y1 * y2) * (y1 * y2);
    const TrigPoly rhs = (TrigPoly(1) - x1 * x1) * (TrigPoly(1) - x2 * x2);
    CHECK(lhs == rhs);
    CHECK(lhs.size() == 4);
    CHECK_FALSE(lhs.has_y());
    std::mt19937_64 rng(3);
    for (int s = 0; s < 20; ++s) {
        const auto a = random_angles(rng);
        CHECK(rel(lhs.eval_at(a), std::pow(std::sin(a[0]) * std::sin(a[1]), 2)) < 1e-12);
    }
    for (const auto& [m, c] : pow(y1 + y2 + x1, 5).terms()) CHECK(m.y <= 0x3);
}

TEST_CASE("cancellation yields the empty term map") {
    std::mt19937_64 rng(4);
    const TrigPoly p = random_poly(rng, 12);
    CHECK((p + Rational(-1) * p).is_zero());
    CHECK((p - p).terms().empty());
}

TEST_CASE("eval_at examples") {
    CHECK(TrigPoly::x(1).eval_at({0, 1, 2, 3, 4}) == 1.0);
    TrigPoly prod(1);
    for (int i = 1; i <= 5; ++i) prod = prod * d_sym(i);
    const double t = kPi / 3;
    CHECK(prod.eval_at({t, t, t, t, t}) == doctest::Approx(1.0 / 32).epsilon(1e-14));
    // y1^2 + x1^2 - 1 is identically zero after reduction
    const TrigPoly pyth = TrigPoly::y(1) * TrigPoly::y(1) + TrigPoly::x(1) * TrigPoly::x(1) - TrigPoly(1);
    CHECK(pyth.is_zero());
}

TEST_CASE("exact evaluation in Q(sqrt 3)") {
    const TrigPoly p = TrigPoly::y(1) * TrigPoly::y(2) + TrigPoly::x(3);
    std::array<QSqrt3, 5> xs, ys;
    xs.fill(QSqrt3(Rational(1, 2)));
    ys.fill(QSqrt3(Rational(0), Rational(1, 2)));
    CHECK(p.evaluate(xs, ys) == QSqrt3(Rational(5, 4)));
}

TEST_CASE("multiplication is sound against numeric evaluation") {
    std::mt19937_64 rng(5);
    for (int s = 0; s < 30; ++s) {
        const TrigPoly p = random_poly(rng, 8), q = random_poly(rng, 8);
        const TrigPoly pq = p * q;
        for (int k = 0; k < 20; ++k) {
            const auto a = random_angles(rng);
            const double expect = p.eval_at(a) * q.eval_at(a);
            CHECK(std::abs(pq.eval_at(a) - expect) <= 1e-9 * std::max(1.0, std::abs(expect)));
        }
    }
}

TEST_CASE("canonical form and idempotent reduction") {
    std::mt19937_64 rng(6);
    for (int s = 0; s < 30; ++s) {
        const TrigPoly p = random_poly(rng, 10), q = random_poly(rng, 10);
        CHECK(p + (q - q) == p);
        CHECK(p.reduced() == p);
        CHECK(p.reduced().reduced() == p.reduced());
        CHECK(p * q == q * p);
        CHECK((p + q) * q == p * q + q * q);
    }
}

TEST_CASE("permutation and conjugation") {
    const TrigPoly p = TrigPoly::x(1) * TrigPoly::y(2) + Rational(3) * TrigPoly::y(3);
    const TrigPoly s = p.permuted({2, 1, 3, 4, 5});
    CHECK(s == TrigPoly::x(2) * TrigPoly::y(1) + Rational(3) * TrigPoly::y(3));
    CHECK(p.conjugated() == -p);
    const TrigPoly e = TrigPoly::y(1) * TrigPoly::y(2);
    CHECK(e.conjugated() == e);
}

TEST_CASE("monomial order is graded lexicographic") {
    TrigPoly p = TrigPoly::x(1) * TrigPoly::x(1) + TrigPoly::y(5) + TrigPoly(2) + TrigPoly::x(2);
    std::vector<int> degs;
    for (const auto& [m, c] : p.terms()) degs.push_back(m.degree());
    CHECK(std::is_sorted(degs.begin(), degs.end()));
    CHECK(p.terms().begin()->first.degree() == 0);
}

TEST_CASE("text round trip") {
    std::mt19937_64 rng(8);
    const TrigPoly p = random_poly(rng, 15) * Rational(1, 3);
    const std::string text = p.to_text();
    CHECK(TrigPoly::from_text(text) == p);
    CHECK(text.find(" : ") != std::string::npos);
    CHECK(TrigPoly::from_text("2/3 : 1 0 0 0 0 0 0 0 0 0\n") == Rational(2, 3) * TrigPoly::x(1));
    // higher powers of y are reduced on input
    CHECK(TrigPoly::from_text("1 : 0 0 0 0 0 2 0 0 0 0") == TrigPoly(1) - TrigPoly::x(1) * TrigPoly::x(1));
    try {
        TrigPoly::from_text("1 : 0 0 0 0 0 0 0 0 0 0\nbogus\n");
        FAIL("expected a parse error");
    } catch (const InputParseError& e) {
        CHECK(e.line_number == 2);
    }
    CHECK(p.to_text(3).find('\n') != std::string::npos);
}

TEST_CASE("y_coefficient extracts the x-only factor") {
    const TrigPoly p = (TrigPoly(3) + TrigPoly::x(3)) * TrigPoly::y(1) * TrigPoly::y(2) + TrigPoly::x(4);
    CHECK(p.y_coefficient(0b11) == TrigPoly(3) + TrigPoly::x(3));
    CHECK(p.y_coefficient(0) == TrigPoly::x(4));
    CHECK(p.max_variable() == 4);
}
