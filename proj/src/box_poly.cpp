#include "dsmale/box_poly.hpp"

#include <sstream>

#include "dsmale/error.hpp"

namespace dsmale {
namespace {

void check_box_index(int k) {
    if (k < 1 || k > kBoxVars) throw BadIndex("box variable index " + std::to_string(k) + " outside 1..4");
}

BoxPoly from_trig(const TrigPoly& p, BoxDomain domain) {
    if (p.has_y()) throw ResidualYVariable("polynomial still contains sine variables");
    if (p.max_variable() > kBoxVars) throw UnsupportedShape("x_5 occurs in a four-variable polynomial");
    // x_k -> 1 - 2 w_k on the unit box, x_k -> x_k on the symmetric box.
    std::array<BoxPoly, kBoxVars> image{BoxPoly(domain), BoxPoly(domain), BoxPoly(domain), BoxPoly(domain)};
    for (int k = 1; k <= kBoxVars; ++k) {
        const BoxPoly v = BoxPoly::var(k, domain);
        image[static_cast<std::size_t>(k - 1)] =
            domain == BoxDomain::Unit ? BoxPoly(Rational(1), domain) - v * Rational(2) : v;
    }
    std::array<std::vector<BoxPoly>, kBoxVars> powers;
    BoxPoly out(domain);
    for (const auto& [m, c] : p.terms()) {
        BoxPoly term(c, domain);
        for (std::size_t k = 0; k < kBoxVars; ++k) {
            auto& pw = powers[k];
            if (pw.empty()) pw.push_back(BoxPoly(Rational(1), domain));
            while (pw.size() <= m.x[k]) pw.push_back(pw.back() * image[k]);
            if (m.x[k] > 0) term = term * pw[m.x[k]];
        }
        out += term;
    }
    return out;
}

}  // namespace

int BoxMonomial::degree() const {
    int d = 0;
    for (auto v : e) d += v;
    return d;
}

std::strong_ordering operator<=>(const BoxMonomial& a, const BoxMonomial& b) {
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    return a.e <=> b.e;
}

BoxPoly::BoxPoly(const Rational& c, BoxDomain domain) : domain_(domain) {
    if (sgn(c) != 0) terms_.emplace(BoxMonomial{}, c);
}

BoxPoly BoxPoly::var(int k, BoxDomain domain) {
    check_box_index(k);
    BoxPoly p(domain);
    BoxMonomial m;
    m.e[static_cast<std::size_t>(k - 1)] = 1;
    p.terms_.emplace(m, Rational(1));
    return p;
}

Rational BoxPoly::coefficient(const BoxMonomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

std::vector<int> BoxPoly::variables() const {
    std::vector<int> out;
    for (int k = 1; k <= kBoxVars; ++k)
        if (degree_in(k) > 0) out.push_back(k);
    return out;
}

int BoxPoly::degree_in(int k) const {
    check_box_index(k);
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.e[static_cast<std::size_t>(k - 1)]));
    return d;
}

int BoxPoly::total_degree() const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

void BoxPoly::add_term(const BoxMonomial& m, const Rational& c) {
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
}

BoxPoly& BoxPoly::operator+=(const BoxPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

BoxPoly& BoxPoly::operator-=(const BoxPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

BoxPoly& BoxPoly::operator*=(const Rational& s) {
    if (sgn(s) == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
}

BoxPoly operator*(const BoxPoly& l, const BoxPoly& r) {
    BoxPoly out(l.domain_);
    for (const auto& [ma, ca] : l.terms_) {
        for (const auto& [mb, cb] : r.terms_) {
            BoxMonomial m;
            for (std::size_t k = 0; k < kBoxVars; ++k) m.e[k] = static_cast<std::uint8_t>(ma.e[k] + mb.e[k]);
            out.add_term(m, ca * cb);
        }
    }
    return out;
}

BoxPoly pow(const BoxPoly& p, unsigned n) {
    BoxPoly out(Rational(1), p.domain());
    for (unsigned k = 0; k < n; ++k) out = out * p;
    return out;
}

double BoxPoly::eval(const std::array<double, kBoxVars>& v) const {
    double total = 0.0;
    for (const auto& [m, c] : terms_) {
        double t = c.get_d();
        for (std::size_t k = 0; k < kBoxVars; ++k)
            for (int e = 0; e < m.e[k]; ++e) t *= v[k];
        total += t;
    }
    return total;
}

Rational BoxPoly::eval_exact(const std::array<Rational, kBoxVars>& v) const {
    Rational total = 0;
    for (const auto& [m, c] : terms_) {
        Rational t = c;
        for (std::size_t k = 0; k < kBoxVars; ++k)
            for (int e = 0; e < m.e[k]; ++e) t *= v[k];
        total += t;
    }
    return total;
}

std::string BoxPoly::to_text() const {
    std::ostringstream os;
    for (const auto& [m, c] : terms_) {
        os << c.get_num().get_str() << '/' << c.get_den().get_str() << " :";
        for (auto e : m.e) os << ' ' << static_cast<int>(e);
        os << '\n';
    }
    return os.str();
}

BoxPoly substitute_box(const TrigPoly& p) {
    return from_trig(p, BoxDomain::Unit);
}

BoxPoly x_only(const TrigPoly& p) {
    return from_trig(p, BoxDomain::Symmetric);
}

BoxMinimum box_quadratic_min(const BoxPoly& p) {
    const std::vector<int> vars = p.variables();
    if (vars.size() > 2) throw UnsupportedShape("box_quadratic_min handles at most two variables");
    if (p.total_degree() > 2) throw UnsupportedShape("box_quadratic_min handles total degree <= 2");

    const Rational lo = p.domain() == BoxDomain::Unit ? Rational(0) : Rational(-1);
    const Rational hi = 1;

    std::optional<BoxMinimum> best;
    auto consider = [&](const Rational& u, const Rational& v, const char* where) {
        std::array<Rational, kBoxVars> pt{0, 0, 0, 0};
        if (!vars.empty()) pt[static_cast<std::size_t>(vars[0] - 1)] = u;
        if (vars.size() > 1) pt[static_cast<std::size_t>(vars[1] - 1)] = v;
        Rational val = p.eval_exact(pt);
        if (!best || val < best->value) best = BoxMinimum{std::move(val), pt, where};
    };
    auto inside = [&](const Rational& t) { return lo < t && t < hi; };

    if (vars.empty()) {
        consider(0, 0, "corner");
        return *best;
    }

    auto mono = [&](int du, int dv) {
        BoxMonomial m;
        m.e[static_cast<std::size_t>(vars[0] - 1)] = static_cast<std::uint8_t>(du);
        if (vars.size() > 1) m.e[static_cast<std::size_t>(vars[1] - 1)] = static_cast<std::uint8_t>(dv);
        return p.coefficient(m);
    };
    const Rational a = mono(1, 0);
    const Rational A = mono(2, 0);

    if (vars.size() == 1) {
        consider(lo, 0, "corner");
        consider(hi, 0, "corner");
        if (sgn(A) != 0) {
            const Rational u = -a / (2 * A);
            if (inside(u)) consider(u, 0, "interior");
        }
        return *best;
    }

    const Rational b = mono(0, 1);
    const Rational B = mono(1, 1);
    const Rational C = mono(0, 2);

    for (const Rational& u : {lo, hi})
        for (const Rational& v : {lo, hi}) consider(u, v, "corner");

    // Edges: one coordinate pinned, stationary point of the remaining quadratic.
    for (const Rational& u : {lo, hi}) {
        if (sgn(C) == 0) continue;
        const Rational v = -(b + B * u) / (2 * C);
        if (inside(v)) consider(u, v, "edge");
    }
    for (const Rational& v : {lo, hi}) {
        if (sgn(A) == 0) continue;
        const Rational u = -(a + B * v) / (2 * A);
        if (inside(u)) consider(u, v, "edge");
    }

    const Rational det = 4 * A * C - B * B;
    if (sgn(det) != 0) {
        const Rational u = (-2 * C * a + B * b) / det;
        const Rational v = (-2 * A * b + B * a) / det;
        if (inside(u) && inside(v)) consider(u, v, "interior");
    }
    return *best;
}

}  // namespace dsmale
