#include "doctest.h"

#include <random>

#include "dsmale/box_poly.hpp"
#include "dsmale/error.hpp"

using namespace dsmale;

namespace {

BoxPoly w(int k) { return BoxPoly::var(k, BoxDomain::Unit); }
BoxPoly x(int k) { return BoxPoly::var(k, BoxDomain::Symmetric); }
BoxPoly cs(const Rational& c) { return BoxPoly(c, BoxDomain::Symmetric); }

}  // namespace

TEST_CASE("substitute_box") {
    CHECK(substitute_box(TrigPoly::x(1)) == BoxPoly(Rational(1), BoxDomain::Unit) - Rational(2) * w(1));
    CHECK(substitute_box(TrigPoly(3730)) == BoxPoly(Rational(3730), BoxDomain::Unit));
    CHECK_THROWS_AS(substitute_box(TrigPoly::y(2)), ResidualYVariable);
    CHECK_THROWS_AS(substitute_box(TrigPoly::x(5)), UnsupportedShape);
    const TrigPoly p = TrigPoly::x(1) * TrigPoly::x(2) - TrigPoly::x(3);
    const BoxPoly q = substitute_box(p);
    const std::array<Rational, 4> pt{Rational(1, 3), Rational(1, 5), Rational(3, 4), Rational(0)};
    CHECK(q.eval_exact(pt) == (1 - 2 * pt[0]) * (1 - 2 * pt[1]) - (1 - 2 * pt[2]));
}

TEST_CASE("box_quadratic_min examples") {
    const TrigPoly u = TrigPoly::x(3), v = TrigPoly::x(4);
    const TrigPoly br = TrigPoly(301) - Rational(238) * u + Rational(14) * (u * u) - Rational(238) * v +
                        Rational(182) * (u * v) + Rational(14) * (v * v);
    const BoxMinimum m = box_quadratic_min(x_only(br));
    CHECK(sgn(m.value) >= 0);
    CHECK(m.value == Rational(35));

    const BoxPoly w2 = w(1) * w(1);
    CHECK(box_quadratic_min(w2).value == 0);

    const BoxPoly vertex = (x(1) - cs(Rational(1, 2))) * (x(1) - cs(Rational(1, 2))) - cs(Rational(1, 8));
    const BoxMinimum mv = box_quadratic_min(vertex);
    CHECK(mv.value == Rational(-1, 8));
    CHECK(mv.argmin[0] == Rational(1, 2));
    CHECK(mv.location == "interior");
}

TEST_CASE("box_quadratic_min rejects unsupported shapes") {
    CHECK_THROWS_AS(box_quadratic_min(x(1) * x(2) * x(3)), UnsupportedShape);
    CHECK_THROWS_AS(box_quadratic_min(x(1) * x(1) * x(1)), UnsupportedShape);
    CHECK_THROWS_AS(box_quadratic_min(x(1) + x(2) + x(3)), UnsupportedShape);
}

TEST_CASE("box_quadratic_min matches a dense grid on random quadratics") {
    std::mt19937_64 rng(12);
    std::uniform_int_distribution<int> c(-20, 20);
    const int n = 1000;  // 10^6 grid points per polynomial
    for (int s = 0; s < 8; ++s) {
        const BoxDomain dom = s % 2 ? BoxDomain::Unit : BoxDomain::Symmetric;
        const BoxPoly a = BoxPoly::var(1, dom), b = BoxPoly::var(2, dom);
        const BoxPoly p = BoxPoly(Rational(c(rng)), dom) + Rational(c(rng)) * a + Rational(c(rng)) * b +
                          Rational(c(rng)) * (a * a) + Rational(c(rng)) * (a * b) + Rational(c(rng)) * (b * b);
        const double exact = box_quadratic_min(p).value.get_d();
        const double lo = dom == BoxDomain::Unit ? 0.0 : -1.0;
        const double h = 1.0 / (n - 1) * (dom == BoxDomain::Unit ? 1.0 : 2.0);
        double grid = 1e300;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) grid = std::min(grid, p.eval({lo + i * h, lo + j * h, 0.0, 0.0}));
        CHECK(exact <= grid + 1e-9);
        // Lipschitz bound of the quadratic on the box times the grid step
        CHECK(grid - exact <= 200.0 * h);
    }
}

TEST_CASE("BoxPoly arithmetic and degrees") {
    const BoxPoly p = w(1) * w(1) * w(2) + Rational(3) * w(4);
    CHECK(p.degree_in(1) == 2);
    CHECK(p.degree_in(3) == 0);
    CHECK(p.total_degree() == 3);
    CHECK(p.variables() == std::vector<int>{1, 2, 4});
    CHECK((p - p).is_zero());
    CHECK(pow(w(1), 3) == w(1) * w(1) * w(1));
    CHECK_FALSE(BoxPoly(Rational(1), BoxDomain::Unit) == BoxPoly(Rational(1), BoxDomain::Symmetric));
}
