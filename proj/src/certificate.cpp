#include "dsmale/certificate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include "dsmale/numeric_terms.hpp"

namespace dsmale {
namespace {

TrigPoly X(int i) { return TrigPoly::x(i); }
TrigPoly Y(int i) { return TrigPoly::y(i); }

TrigNonneg D(int i) { return TrigNonneg::atom_d(i); }
TrigNonneg C(const Rational& c) { return TrigNonneg::constant(c, TrigPoly(1)); }
TrigNonneg sq(const TrigPoly& p, const std::string& label) { return TrigNonneg::square(p, label); }

std::string idx(int i) { return std::to_string(i); }
std::string ydl(int i, int j) { return "y" + idx(i) + "-y" + idx(j); }
std::string xdl(int i, int j) { return "x" + idx(i) + "-x" + idx(j); }
std::string bl(int i) { return "b" + idx(i); }

TrigMonomial monomial(std::initializer_list<int> xs, std::initializer_list<int> ys) {
    TrigMonomial m;
    for (int i : xs) m.x[static_cast<std::size_t>(i - 1)] += 1;
    for (int i : ys) m.y = static_cast<std::uint8_t>(m.y | (1U << (i - 1)));
    return m;
}

std::uint8_t ymask(int i, int j) {
    return static_cast<std::uint8_t>((1U << (i - 1)) | (1U << (j - 1)));
}

using Group = std::pair<std::string, TrigNonneg>;

CertifiedBlock finish(int k, const std::vector<Group>& groups) {
    CertifiedBlock out;
    out.k = k;
    for (const auto& [label, term] : groups) {
        out.value += term.value();
        out.groups.emplace_back(label, term.shape());
    }
    return out;
}

template <class F>
TrigNonneg sum_over(const std::vector<std::array<int, 5>>& perms, const std::string& label, F&& make_term) {
    std::vector<TrigNonneg> items;
    items.reserve(perms.size());
    for (const auto& p : perms) items.push_back(make_term(p));
    return TrigNonneg::sum(items, label, TrigPoly());
}

template <std::size_t N, class F>
TrigNonneg sum_over(const std::vector<std::array<int, N>>& family, const std::string& label, F&& make_term)
    requires(N != 5)
{
    std::vector<TrigNonneg> items;
    items.reserve(family.size());
    for (const auto& e : family) items.push_back(make_term(e));
    return TrigNonneg::sum(items, label, TrigPoly());
}

CertifiedBlock block_J1() {
    const auto& s = IndexSets::instance();
    std::vector<Group> g;
    g.emplace_back("J1.1 (115/6) sum_E1 d d d y^2", sum_over(s.E1, "E1", [](const auto& p) {
                       return D(p[0]) * D(p[1]) * D(p[2]) * sq(y_diff(p[3], p[4]), ydl(p[3], p[4]));
                   }).scaled(Rational(115, 6)));
    g.emplace_back("J1.2 4 sum_E2 x^2 y^2", sum_over(s.E2, "E2", [](const auto& e) {
                       return sq(x_diff(e[0], e[1]), xdl(e[0], e[1])) * sq(y_diff(e[2], e[3]), ydl(e[2], e[3]));
                   }).scaled(Rational(4)));
    g.emplace_back("J1.3 (11/12) sum_E1 (b+b+b)^2 d d", sum_over(s.E1, "E1", [](const auto& p) {
                       return sq(b_sym(p[0]) + b_sym(p[1]) + b_sym(p[2]), bl(p[0]) + "+" + bl(p[1]) + "+" + bl(p[2])) *
                              D(p[3]) * D(p[4]);
                   }).scaled(Rational(11, 12)));
    g.emplace_back("J1.4 (205/48) sum_E1 d d d (b+b)^2", sum_over(s.E1, "E1", [](const auto& p) {
                       return D(p[0]) * D(p[1]) * D(p[2]) * sq(b_sym(p[3]) + b_sym(p[4]), bl(p[3]) + "+" + bl(p[4]));
                   }).scaled(Rational(205, 48)));
    g.emplace_back("J1.5 (1/144) sum_E1 (d+d+d)(19 b^2 b^2 + 96 y^2)", sum_over(s.E1, "E1", [](const auto& p) {
                       return (D(p[0]) + D(p[1]) + D(p[2])) *
                              (C(19) * sq(b_sym(p[3]), bl(p[3])) * sq(b_sym(p[4]), bl(p[4])) +
                               C(96) * sq(y_diff(p[3], p[4]), ydl(p[3], p[4])));
                   }).scaled(Rational(1, 144)));
    return finish(1, g);
}

TrigNonneg j2_group1(const std::array<int, 5>& p) {
    return C(2) * (C(15) * D(p[0]) + C(4)) *
           (sq(y_diff(p[1], p[2]), ydl(p[1], p[2])) * sq(y_diff(p[3], p[4]), ydl(p[3], p[4])));
}

TrigNonneg j2_group2(const std::array<int, 5>& p) {
    return C(Rational(3, 8)) * D(p[0]) *
           sq(b_sym(p[1]) + b_sym(p[2]) + b_sym(p[3]) + b_sym(p[4]),
              bl(p[1]) + "+" + bl(p[2]) + "+" + bl(p[3]) + "+" + bl(p[4]));
}

TrigNonneg j2_group3(const std::array<int, 5>& p) {
    return C(Rational(43, 12)) * sq(b_sym(p[0]), bl(p[0])) * (D(p[1]) + D(p[2]) + D(p[3]) + D(p[4]));
}

CertifiedBlock block_J2(J2Reading reading) {
    const auto& s = IndexSets::instance();
    std::vector<Group> g;
    if (reading == J2Reading::PrefactorOnAllGroups) {
        g.emplace_back("J2.1 (1/16) sum_E1 (2(15d+4) y^2 y^2 + (3/8) d (b+b+b+b)^2 + (43/12) b^2 (d+d+d+d))",
                       sum_over(s.E1, "E1", [](const auto& p) {
                           return j2_group1(p) + j2_group2(p) + j2_group3(p);
                       }).scaled(Rational(1, 16)));
    } else {
        g.emplace_back("J2.1 (1/16) sum_E1 2(15d+4) y^2 y^2",
                       sum_over(s.E1, "E1", [](const auto& p) { return j2_group1(p); }).scaled(Rational(1, 16)));
        g.emplace_back("J2.1' sum_E1 ((3/8) d (b+b+b+b)^2 + (43/12) b^2 (d+d+d+d))",
                       sum_over(s.E1, "E1", [](const auto& p) { return j2_group2(p) + j2_group3(p); }));
    }
    g.emplace_back("J2.2 (25/4) sum_E4 b^2 d d d", sum_over(s.E4, "E4", [](const auto& u) {
                       return sq(b_sym(u[0]), bl(u[0])) * D(u[1]) * D(u[2]) * D(u[3]);
                   }).scaled(Rational(25, 4)));
    return finish(2, g);
}

CertifiedBlock block_J3() {
    const auto& s = IndexSets::instance();
    std::vector<Group> g;
    g.emplace_back("J3 (1/4) sum_E2 (b b - b b)^2", sum_over(s.E2, "E2", [](const auto& e) {
                       return sq(b_sym(e[0]) * b_sym(e[1]) - b_sym(e[2]) * b_sym(e[3]),
                                 bl(e[0]) + bl(e[1]) + "-" + bl(e[2]) + bl(e[3]));
                   }).scaled(Rational(1, 4)));
    return finish(3, g);
}

CertifiedBlock block_J4() {
    const auto& s = IndexSets::instance();
    std::vector<Group> g;
    g.emplace_back("J4 2 sum_E3 (7 x^2 + 10 y^2)", sum_over(s.E3, "E3", [](const auto& t) {
                       return C(7) * sq(x_diff(t[0], t[1]), xdl(t[0], t[1])) +
                              C(10) * sq(y_diff(t[0], t[1]), ydl(t[0], t[1]));
                   }).scaled(Rational(2)));
    return finish(4, g);
}

CertifiedBlock block_J5() {
    const auto& s = IndexSets::instance();
    std::vector<Group> g;
    g.emplace_back("J5 (1/192) sum_E1 (7 (b + b b)^2 (d+d) + 720 d^2 y^2 (d+d))", sum_over(s.E1, "E1", [](const auto& p) {
                       const TrigNonneg dd = D(p[3]) + D(p[4]);
                       return C(7) * sq(b_sym(p[0]) + b_sym(p[1]) * b_sym(p[2]), bl(p[0]) + "+" + bl(p[1]) + bl(p[2])) * dd +
                              C(720) * sq(d_sym(p[0]), "d" + idx(p[0])) * sq(y_diff(p[1], p[2]), ydl(p[1], p[2])) * dd;
                   }).scaled(Rational(1, 192)));
    return finish(5, g);
}

std::array<double, 5> random_angles(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0.0, 2.0 * std::acos(-1.0));
    std::array<double, 5> a{};
    for (auto& v : a) v = u(rng);
    return a;
}

double rel_diff(double sym, double num) {
    return std::abs(sym - num) / std::max(1.0, std::abs(num));
}

double numeric_bracket(double u, double v) {
    return 301 - 238 * u + 14 * u * u - 238 * v + 182 * u * v + 14 * v * v;
}

double numeric_h1(const std::array<double, 4>& phi) {
    std::array<double, 4> y{};
    for (std::size_t i = 0; i < 4; ++i) y[i] = std::sin(phi[i]);
    const double h = 11025.0 * (numeric::b_squared(phi) - numeric::a_squared(phi));
    auto s = [&](int i, int j) {
        const double v = y[static_cast<std::size_t>(i - 1)] - y[static_cast<std::size_t>(j - 1)];
        return v * v;
    };
    return h - 7.0 * (s(1, 2) * s(3, 4) + s(1, 3) * s(2, 4) + s(1, 4) * s(3, 2));
}

double numeric_h2_chain(const std::array<double, 4>& phi) {
    std::array<double, 4> x{};
    std::array<double, 4> y{};
    for (std::size_t i = 0; i < 4; ++i) {
        x[i] = std::cos(phi[i]);
        y[i] = std::sin(phi[i]);
    }
    double v = numeric_h1(phi);
    for (const auto& c : lemma_bracket_pairs()) {
        const auto p = static_cast<std::size_t>(c[0] - 1), q = static_cast<std::size_t>(c[1] - 1);
        const auto r = static_cast<std::size_t>(c[2] - 1), s = static_cast<std::size_t>(c[3] - 1);
        v -= 0.5 * numeric_bracket(x[r], x[s]) * (y[p] - y[q]) * (y[p] - y[q]);
    }
    return v;
}

}  // namespace

const IndexSets& IndexSets::instance() {
    static const IndexSets sets = [] {
        IndexSets s;
        std::array<int, 5> p{1, 2, 3, 4, 5};
        do {
            s.E1.push_back(p);
        } while (std::next_permutation(p.begin(), p.end()));
        for (int i = 1; i <= 5; ++i)
            for (int j = i + 1; j <= 5; ++j) s.E3.push_back({i, j});
        for (const auto& a : s.E3)
            for (const auto& b : s.E3)
                if (a[0] != b[0] && a[0] != b[1] && a[1] != b[0] && a[1] != b[1]) s.E2.push_back({a[0], a[1], b[0], b[1]});
        for (int k = 1; k <= 5; ++k) {
            std::vector<int> rest;
            for (int i = 1; i <= 5; ++i)
                if (i != k) rest.push_back(i);
            for (std::size_t a = 0; a < rest.size(); ++a)
                for (std::size_t b = a + 1; b < rest.size(); ++b)
                    for (std::size_t c = b + 1; c < rest.size(); ++c) s.E4.push_back({k, rest[a], rest[b], rest[c]});
        }
        return s;
    }();
    return sets;
}

std::pair<TrigPoly, TrigPoly> integral_parts(int nvars, int extra_t_power) {
    if (nvars < 0 || nvars > kAngleVars) throw BadIndex("integral_parts: nvars outside 0..5");
    // Coefficients of the t-polynomial, as (real, imaginary) pairs.
    std::vector<std::pair<TrigPoly, TrigPoly>> c{{TrigPoly(1), TrigPoly()}};
    for (int j = 1; j <= nvars; ++j) {
        const TrigPoly xj = X(j);
        const TrigPoly yj = Y(j);
        std::vector<std::pair<TrigPoly, TrigPoly>> next(c.size() + 1);
        for (std::size_t k = 0; k < c.size(); ++k) {
            next[k].first += c[k].first;
            next[k].second += c[k].second;
            // - z_j * c_k t^(k+1)
            next[k + 1].first -= xj * c[k].first - yj * c[k].second;
            next[k + 1].second -= xj * c[k].second + yj * c[k].first;
        }
        c = std::move(next);
    }
    // times (1 - t)
    std::vector<std::pair<TrigPoly, TrigPoly>> withlin(c.size() + 1);
    for (std::size_t k = 0; k < c.size(); ++k) {
        withlin[k].first += c[k].first;
        withlin[k].second += c[k].second;
        withlin[k + 1].first -= c[k].first;
        withlin[k + 1].second -= c[k].second;
    }
    TrigPoly re;
    TrigPoly im;
    for (std::size_t k = 0; k < withlin.size(); ++k) {
        const Rational w(1, static_cast<long>(k) + extra_t_power + 1);
        re += withlin[k].first * w;
        im += withlin[k].second * w;
    }
    return {re, im};
}

TrigPoly build_S_squared() {
    const auto [re, im] = integral_parts(5, 0);
    return re * re + im * im;
}

TrigPoly build_g() {
    return build_S_squared() * Rational(25200) - TrigPoly(Rational(3600, 7));
}

std::string to_string(J2Reading r) {
    return r == J2Reading::PrefactorOnAllGroups ? "prefactor-on-all-groups" : "prefactor-on-first-group";
}

CertifiedBlock build_J_certified(int k, J2Reading reading) {
    switch (k) {
        case 1: return block_J1();
        case 2: return block_J2(reading);
        case 3: return block_J3();
        case 4: return block_J4();
        case 5: return block_J5();
        default: throw BadIndex("J index must be 1..5");
    }
}

TrigPoly build_J(int k, J2Reading reading) {
    return build_J_certified(k, reading).value;
}

IdentityReport verify_identity_with(const TrigPoly& g, const std::array<TrigPoly, 5>& blocks) {
    IdentityReport rep;
    TrigPoly residual = g;
    for (const auto& b : blocks) residual -= b;
    rep.g_terms = g.size();
    rep.residual_terms = residual.size();
    rep.pass = residual.is_zero();
    if (!rep.pass) rep.residual_dump = residual.to_text(200);
    return rep;
}

IdentityReport verify_identity_id1(std::uint64_t seed, int samples) {
    std::mt19937_64 rng(seed);
    std::vector<std::array<double, 5>> pts;
    for (int s = 0; s < samples; ++s) pts.push_back(random_angles(rng));

    auto mismatch = [&](J2Reading r) {
        double worst = 0.0;
        for (const auto& a : pts) worst = std::max(worst, rel_diff(numeric::J_sum(a, r), numeric::g(a)));
        return worst;
    };
    J2Reading reading = J2Reading::PrefactorOnAllGroups;
    double mm = mismatch(reading);
    if (mm > 1e-6) {
        const double alt = mismatch(J2Reading::PrefactorOnFirstGroup);
        if (alt < mm) {
            reading = J2Reading::PrefactorOnFirstGroup;
            mm = alt;
        }
    }

    const TrigPoly g = build_g();
    std::array<TrigPoly, 5> blocks;
    std::vector<std::pair<std::string, std::string>> evidence;
    for (int k = 1; k <= 5; ++k) {
        CertifiedBlock b = build_J_certified(k, reading);
        blocks[static_cast<std::size_t>(k - 1)] = std::move(b.value);
        for (auto& gr : b.groups) evidence.push_back(std::move(gr));
    }

    IdentityReport rep = verify_identity_with(g, blocks);
    rep.reading = reading;
    rep.reading_mismatch = mm;
    rep.numeric_samples = samples;
    double disc = 0.0;
    for (const auto& a : pts) {
        double js = 0.0;
        for (const auto& b : blocks) js += b.eval_at(a);
        disc = std::max(disc, rel_diff(js, g.eval_at(a)));
        disc = std::max(disc, rel_diff(g.eval_at(a), numeric::g(a)));
    }
    rep.numeric_max_discrepancy = std::max(disc, mm);
    rep.numeric_pass = rep.numeric_max_discrepancy < 1e-8;
    rep.nonneg_evidence = std::move(evidence);
    return rep;
}

LemmaIntegrands build_lemma_integrands() {
    const auto [ra, ia] = integral_parts(4, 1);
    const auto [rb, ib] = integral_parts(4, 0);
    LemmaIntegrands L;
    L.a_sq = ra * ra + ia * ia;
    L.b_sq = rb * rb + ib * ib;
    L.h = (L.b_sq - L.a_sq) * Rational(11025);
    return L;
}

TrigPoly lemma_display_h() {
    const TrigPoly x1 = X(1), x2 = X(2), x3 = X(3), x4 = X(4);
    const TrigPoly y1 = Y(1), y2 = Y(2), y3 = Y(3), y4 = Y(4);
    TrigPoly h = TrigPoly(3730);
    h += Rational(1064) * (x1 * x2 * x3 * x4);
    h -= Rational(2359) * (x1 + x2 + x3 + x4);
    h += Rational(84) * (y1 * y2 * y3 * y4);
    h += Rational(1701) * (x1 * x2 + x1 * x3 + x2 * x3 + x1 * x4 + x2 * x4 + x3 * x4);
    h -= Rational(329) * (y1 * y2 + y1 * y3 + y2 * y3 + y1 * y4 + y2 * y4 + y3 * y4);
    h -= Rational(1316) * (x1 * x2 * x3 + x1 * x2 * x4 + x1 * x3 * x4 + x2 * x3 * x4);
    h += Rational(238) * (x3 * y1 * y2 + x4 * y1 * y2 + x2 * y1 * y3 + x4 * y1 * y3 + x1 * y2 * y3 + x4 * y2 * y3 +
                          x2 * y1 * y4 + x3 * y1 * y4 + x1 * y2 * y4 + x3 * y2 * y4 + x1 * y3 * y4 + x2 * y3 * y4);
    h -= Rational(182) * (x3 * x4 * y1 * y2 + x2 * x4 * y1 * y3 + x1 * x4 * y2 * y3 + x2 * x3 * y1 * y4 +
                          x1 * x3 * y2 * y4 + x1 * x2 * y3 * y4);
    return h;
}

TrigNonneg lemma_square_products() {
    auto s = [](int i, int j) { return sq(y_diff(i, j), ydl(i, j)); };
    return (s(1, 2) * s(3, 4) + s(1, 3) * s(2, 4) + s(1, 4) * s(3, 2)).scaled(Rational(7));
}

TrigPoly lemma_bracket(int i, int j) {
    const TrigPoly u = X(i), v = X(j);
    return TrigPoly(301) - Rational(238) * u + Rational(14) * (u * u) - Rational(238) * v + Rational(182) * (u * v) +
           Rational(14) * (v * v);
}

const std::array<std::array<int, 4>, 6>& lemma_bracket_pairs() {
    static const std::array<std::array<int, 4>, 6> pairs{{
        {1, 2, 3, 4},
        {1, 3, 2, 4},
        {1, 4, 2, 3},
        {2, 3, 1, 4},
        {2, 4, 1, 3},
        {3, 4, 1, 2},
    }};
    return pairs;
}

std::vector<std::pair<std::string, BoxNonneg>> h2_display_groups() {
    const BoxPoly one(Rational(1), BoxDomain::Unit);
    auto W = [](int k) { return BoxNonneg::atom_w(k); };
    auto w = [](int k) { return BoxPoly::var(k, BoxDomain::Unit); };
    auto Cb = [&](long c) { return BoxNonneg::constant(Rational(c), one); };
    auto dsq = [&](int i, int j) {
        return BoxNonneg::square(w(i) - w(j), "w" + idx(i) + "-w" + idx(j));
    };
    auto lin_sq = [&](int k) {  // (5 w_k - 1)^2 + w_k^2
        return BoxNonneg::square(w(k) * Rational(5) - one, "5w" + idx(k) + "-1") + BoxNonneg::square(w(k), "w" + idx(k));
    };
    auto prod_sq = [&](int i, int j) {  // (4 w_i w_j - 1)^2
        return BoxNonneg::square(w(i) * w(j) * Rational(4) - one, "4w" + idx(i) + "w" + idx(j) + "-1");
    };

    std::vector<std::pair<std::string, BoxNonneg>> g;
    g.emplace_back("216", Cb(216));
    g.emplace_back("17024 w1 w2 w3 w4", Cb(17024) * W(1) * W(2) * W(3) * W(4));
    g.emplace_back("70 (w1 + w2 + w3 + w4 + sum (wi - wj)^2)",
                   Cb(70) * (W(1) + W(2) + W(3) + W(4) + dsq(1, 2) + dsq(1, 3) + dsq(1, 4) + dsq(2, 3) + dsq(2, 4) +
                             dsq(3, 4)));
    g.emplace_back("112 ((w3 + w4)(w2 - w1)^2 + ...)",
                   Cb(112) * ((W(3) + W(4)) * dsq(2, 1) + (W(2) + W(4)) * dsq(1, 3) + (W(2) + W(3)) * dsq(1, 4) +
                              (W(1) + W(4)) * dsq(2, 3) + (W(1) + W(3)) * dsq(2, 4) + (W(2) + W(1)) * dsq(4, 3)));
    g.emplace_back("56 ((w1 w2 + w1 w3 + w2 w3)((5 w4 - 1)^2 + w4^2) + ...)",
                   Cb(56) * ((W(1) * W(2) + W(1) * W(3) + W(2) * W(3)) * lin_sq(4) +
                             (W(1) * W(2) + W(1) * W(4) + W(2) * W(4)) * lin_sq(3) +
                             (W(1) * W(3) + W(1) * W(4) + W(3) * W(4)) * lin_sq(2) +
                             (W(2) * W(3) + W(2) * W(4) + W(3) * W(4)) * lin_sq(1)));
    g.emplace_back("14 ((4 w1 w2 - 1)^2 + ...)", Cb(14) * (prod_sq(1, 2) + prod_sq(1, 3) + prod_sq(1, 4) +
                                                            prod_sq(3, 2) + prod_sq(4, 2) + prod_sq(3, 4)));
    return g;
}

LemmaReport verify_lemma1(std::uint64_t seed, int samples) {
    LemmaReport rep;
    const LemmaIntegrands L = build_lemma_integrands();

    // (i) expansion against the display
    const TrigPoly residual = L.h - lemma_display_h();
    rep.expansion_pass = residual.is_zero();
    rep.verbatim = rep.expansion_pass;
    if (!rep.expansion_pass) rep.expansion_residual = residual.to_text(200);
    auto check = [&](const std::string& name, const TrigMonomial& m, long expected) {
        const Rational actual = L.h.coefficient(m);
        rep.coefficients.push_back({name, Rational(expected), actual, actual == expected});
    };
    check("1", monomial({}, {}), 3730);
    check("x1 x2 x3 x4", monomial({1, 2, 3, 4}, {}), 1064);
    check("x1", monomial({1}, {}), -2359);
    check("y1 y2 y3 y4", monomial({}, {1, 2, 3, 4}), 84);
    check("x1 x2", monomial({1, 2}, {}), 1701);
    check("y1 y2", monomial({}, {1, 2}), -329);
    check("x1 x2 x3", monomial({1, 2, 3}, {}), -1316);
    check("x3 y1 y2", monomial({3}, {1, 2}), 238);
    check("x3 x4 y1 y2", monomial({3, 4}, {1, 2}), -182);

    // (ii) h1 = h - 7 (sum of squared-difference products)
    const TrigNonneg squares = lemma_square_products();
    const TrigPoly h1 = L.h - squares.value();
    rep.h1_difference_pass = (L.h - h1) == squares.value();
    rep.h_chain.push_back({"h - h1 = 7 sum (yi-yj)^2 (yk-yl)^2 >= 0", squares.shape(), "n/a", rep.h1_difference_pass});

    // (iii) brackets: shape of the y_p y_q coefficient in h1 and exact minimum on [-1,1]^2
    TrigPoly reduced = h1;
    for (const auto& c : lemma_bracket_pairs()) {
        const TrigPoly br = lemma_bracket(c[2], c[3]);
        const std::string name = "301 - 238x" + idx(c[2]) + " + 14x" + idx(c[2]) + "^2 - 238x" + idx(c[3]) +
                                 " + 182x" + idx(c[2]) + "x" + idx(c[3]) + " + 14x" + idx(c[3]) + "^2";
        const bool coeff_ok = h1.y_coefficient(ymask(c[0], c[1])) == -br;
        rep.h_chain.push_back({"coefficient of y" + idx(c[0]) + " y" + idx(c[1]) + " in h1 is -(bracket)", name, "n/a",
                               coeff_ok});
        const BoxMinimum bm = box_quadratic_min(x_only(br));
        std::ostringstream where;
        where << bm.value.get_str() << " at (x" << c[2] << ", x" << c[3] << ") = ("
              << bm.argmin[static_cast<std::size_t>(c[2] - 1)].get_str() << ", "
              << bm.argmin[static_cast<std::size_t>(c[3] - 1)].get_str() << ") [" << bm.location << "]";
        rep.h_chain.push_back({"bracket >= 0 on [-1,1]^2", name, where.str(), sgn(bm.value) >= 0});
        reduced -= br * sq(y_diff(c[0], c[1]), ydl(c[0], c[1])).value() * Rational(1, 2);
    }

    // (iv) y-elimination and w-substitution
    rep.y_free = !reduced.has_y();
    rep.h_chain.push_back({"h1 - (1/2) sum bracket (yi-yj)^2 depends on x only", "", "n/a", rep.y_free});
    const auto groups = h2_display_groups();
    BoxPoly display(BoxDomain::Unit);
    for (const auto& [label, term] : groups) display += term.value();
    if (rep.y_free) {
        const BoxPoly h2 = substitute_box(reduced);
        rep.h2_match = h2 == display;
        if (!rep.h2_match) rep.h2_residual = (h2 - display).to_text();
        BoxMonomial all;
        all.e = {1, 1, 1, 1};
        rep.h2_constant = h2.constant_term();
        rep.h2_w1w2w3w4 = h2.coefficient(all);
    }
    rep.h_chain.push_back({"x_k = 1 - 2 w_k gives the displayed h2", "", "n/a", rep.h2_match});

    // (v) h2 summands: nonnegative by construction; spot-check exactly at rational points
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> den(0, 1L << 20);
    std::vector<std::array<Rational, 4>> pts;
    for (int s = 0; s < samples; ++s) {
        std::array<Rational, 4> p;
        for (auto& v : p) {
            v = Rational(den(rng), 1L << 20);
            v.canonicalize();
        }
        pts.push_back(p);
    }
    rep.sample_points = samples;
    for (const auto& [label, term] : groups) {
        bool ok = true;
        for (const auto& p : pts)
            if (sgn(term.value().eval_exact(p)) < 0) ok = false;
        rep.h2_terms.push_back({label, term.shape(), ok});
    }

    rep.pass = rep.expansion_pass && rep.h2_match;
    for (const auto& c : rep.coefficients) rep.pass = rep.pass && c.pass;
    for (const auto& s : rep.h_chain) rep.pass = rep.pass && s.pass;
    for (const auto& t : rep.h2_terms) rep.pass = rep.pass && t.nonneg;
    return rep;
}

EqualityReport verify_equality_cases(const TrigPoly& g, std::uint64_t seed, int samples) {
    EqualityReport rep;
    struct Case {
        const char* name;
        QSqrt3 x;
        QSqrt3 y;
    };
    const Case cases[] = {
        {"phi_i = 0", QSqrt3(1), QSqrt3(0)},
        {"phi_i = pi/3", QSqrt3(Rational(1, 2)), QSqrt3(Rational(0), Rational(1, 2))},
        {"phi_i = -pi/3", QSqrt3(Rational(1, 2)), QSqrt3(Rational(0), Rational(-1, 2))},
    };
    rep.pass = true;
    for (const auto& c : cases) {
        std::array<QSqrt3, 5> xs;
        std::array<QSqrt3, 5> ys;
        xs.fill(c.x);
        ys.fill(c.y);
        const QSqrt3 v = g.evaluate(xs, ys);
        rep.points.push_back({c.name, v.to_string(), v.is_zero()});
        rep.pass = rep.pass && v.is_zero();
    }

    std::mt19937_64 rng(seed);
    rep.samples = samples;
    rep.all_positive = true;
    rep.min_sampled_g = std::numeric_limits<double>::infinity();
    for (int s = 0; s < samples; ++s) {
        const auto a = random_angles(rng);
        const double v = g.eval_at(a);
        if (v < rep.min_sampled_g) {
            rep.min_sampled_g = v;
            rep.min_sampled_at = a;
        }
        if (!(v > 0.0)) rep.all_positive = false;
    }
    rep.pass = rep.pass && rep.all_positive;
    return rep;
}

SymmetryReport check_symmetries(const TrigPoly& p) {
    SymmetryReport rep;
    rep.permutation_invariant = true;
    for (const auto& perm : IndexSets::instance().E1) {
        if (!(p.permuted(perm) == p)) {
            rep.permutation_invariant = false;
            break;
        }
    }
    rep.conjugation_invariant = p.conjugated() == p;
    return rep;
}

OracleReport run_numeric_oracles(std::uint64_t seed, int samples, double tol) {
    OracleReport rep;
    const TrigPoly S2 = build_S_squared();
    const TrigPoly g = S2 * Rational(25200) - TrigPoly(Rational(3600, 7));
    std::array<TrigPoly, 5> J;
    for (int k = 1; k <= 5; ++k) J[static_cast<std::size_t>(k - 1)] = build_J(k);
    const LemmaIntegrands L = build_lemma_integrands();
    const TrigPoly h1 = L.h - lemma_square_products().value();
    BoxPoly h2(BoxDomain::Unit);
    for (const auto& [label, term] : h2_display_groups()) h2 += term.value();

    std::vector<std::string> names{"S^2", "g", "J1", "J2", "J3", "J4", "J5", "|a|^2", "|b|^2", "h", "h1", "h2"};
    std::vector<double> worst(names.size(), 0.0);

    std::mt19937_64 rng(seed);
    for (int s = 0; s < samples; ++s) {
        const auto a = random_angles(rng);
        const std::array<double, 4> a4{a[0], a[1], a[2], a[3]};
        const double gs = g.eval_at(a);
        const double gn = numeric::g(a);
        rep.g_samples.emplace_back(a, std::abs(gs - gn));

        std::vector<double> d;
        d.push_back(rel_diff(S2.eval_at(a), numeric::S_squared(a)));
        d.push_back(rel_diff(gs, gn));
        for (int k = 1; k <= 5; ++k) d.push_back(rel_diff(J[static_cast<std::size_t>(k - 1)].eval_at(a), numeric::J(k, a)));
        d.push_back(rel_diff(L.a_sq.eval_at(a), numeric::a_squared(a4)));
        d.push_back(rel_diff(L.b_sq.eval_at(a), numeric::b_squared(a4)));
        const double hn = 11025.0 * (numeric::b_squared(a4) - numeric::a_squared(a4));
        d.push_back(rel_diff(L.h.eval_at(a), hn));
        d.push_back(rel_diff(h1.eval_at(a), numeric_h1(a4)));
        std::array<double, 4> wv{};
        for (std::size_t i = 0; i < 4; ++i) wv[i] = (1.0 - std::cos(a[i])) / 2.0;
        d.push_back(rel_diff(h2.eval(wv), numeric_h2_chain(a4)));
        for (std::size_t i = 0; i < d.size(); ++i) worst[i] = std::max(worst[i], d[i]);
    }
    rep.pass = true;
    for (std::size_t i = 0; i < names.size(); ++i) {
        rep.entries.push_back({names[i], worst[i], worst[i] <= tol});
        rep.pass = rep.pass && worst[i] <= tol;
    }
    return rep;
}

}  // namespace dsmale
