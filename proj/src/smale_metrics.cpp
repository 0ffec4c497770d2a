#include "dsmale/smale_metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "dsmale/quadrature.hpp"

namespace dsmale {
namespace {

using cplx = std::complex<double>;

void require_class(const ComplexPolynomial& f, double class_tol) {
    if (f.is_zero() || f.degree() < 2) throw NotInClass("polynomial must have degree >= 2");
    if (!is_in_class(f, f.degree(), class_tol)) throw NotInClass("polynomial must satisfy f(0) = 0 and f'(0) = 1");
}

long binomial(int n, int k) {
    long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

DubininResult dubinin_impl(const ComplexPolynomial& f, cplx z, double tol, bool strong) {
    const CriticalSet cs = critical_set(f);
    const cplx fz = f(z);
    DubininResult out;
    for (const auto& cp : cs.points) {
        if (cp.zeta == z) throw std::invalid_argument("z coincides with a critical point");
        const double r = std::abs((fz - f(cp.zeta)) / (z - cp.zeta));
        out.best_ratio = std::max(out.best_ratio, r);
    }
    const double n = f.degree();
    const double pi = std::acos(-1.0);
    const double constant = strong ? 1.0 / n : std::tan(pi / (4.0 * n));
    out.bound = constant / n * std::abs(f.derivative()(z));
    out.pass = out.best_ratio >= out.bound - tol;
    return out;
}

}  // namespace

CriticalSet critical_set(const ComplexPolynomial& f, double tol, double class_tol) {
    require_class(f, class_tol);
    const RootSet rs = find_roots(f.derivative(), tol);
    CriticalSet cs;
    cs.source = f;
    cs.residual_bound = rs.residual_bound;
    cs.points.reserve(rs.roots.size());
    for (const auto& r : rs.roots) {
        cs.points.push_back({r.value, r.multiplicity, f(r.value) / r.value});
    }
    return cs;
}

MetricsReport metrics(const ComplexPolynomial& f, double tol, double class_tol) {
    MetricsReport m;
    m.critical = critical_set(f, tol, class_tol);
    const auto& pts = m.critical.points;
    m.T = std::abs(pts.front().ratio);
    m.S = m.T;
    m.alpha = std::abs(pts.front().zeta);
    for (const auto& p : pts) {
        const double r = std::abs(p.ratio);
        m.T = std::min(m.T, r);
        m.S = std::max(m.S, r);
        m.alpha = std::min(m.alpha, std::abs(p.zeta));
    }
    m.lambda = 0.0;
    for (const auto& p : pts) {
        if (std::abs(p.zeta) <= (1.0 + kLambdaTieTolerance) * m.alpha) m.lambda = std::max(m.lambda, std::abs(p.ratio));
    }
    return m;
}

IntegralRatio integral_ratio(const ComplexPolynomial& f, cplx w, int quad_points) {
    IntegralRatio out;
    const ComplexPolynomial df = f.derivative();
    if (w == 0.0) {
        out.value = out.quadrature = out.direct = df(cplx(0.0));
        out.limit_at_zero = true;
        return out;
    }
    // integral_0^1 k c_k (t w)^(k-1) dt = c_k w^(k-1)
    cplx acc = 0.0;
    const auto& c = f.coeffs();
    for (std::size_t k = c.size(); k-- > 1;) acc = acc * w + c[k];
    out.value = acc;

    const QuadratureRule rule = gauss_legendre_unit(quad_points);
    cplx q = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) q += rule.weights[i] * df(rule.nodes[i] * w);
    out.quadrature = q;
    out.direct = f(w) / w;

    const double scale = std::max(1.0, std::abs(out.value));
    out.discrepancy = std::max(std::abs(out.value - out.quadrature), std::abs(out.value - out.direct)) / scale;
    return out;
}

DubininResult dubinin_check(const ComplexPolynomial& f, cplx z, double tol) {
    return dubinin_impl(f, z, tol, false);
}

DubininResult dubinin_check_strong(const ComplexPolynomial& f, cplx z, double tol) {
    return dubinin_impl(f, z, tol, true);
}

ExactPolynomial extremal_g1(const ExactComplex& a) {
    if (a.is_zero()) throw ZeroScale();
    std::vector<ExactComplex> c(8, ExactComplex(0));
    ExactComplex power(1);  // a^(k-1)
    for (int k = 1; k <= 7; ++k) {
        const long s = (k % 2 == 1) ? 1 : -1;
        c[static_cast<std::size_t>(k)] = ExactComplex(Rational(s * binomial(7, k)) / 7) * power;
        power *= a;
    }
    return ExactPolynomial(std::move(c));
}

ExactPolynomial extremal_g23(const ExactComplex& a, int sign) {
    if (a.is_zero()) throw ZeroScale();
    const ExactComplex q = ExactComplex::sixth_root_of_unity(sign);
    const ExactPolynomial one = ExactPolynomial::constant(ExactComplex(1));
    const ExactPolynomial u{ExactComplex(1), -(a * q)};
    const ExactPolynomial u6 = pow(u, 6);
    const ExactPolynomial inner = (one - u6) * (ExactComplex(7) * q - ExactComplex(1)) +
                                  ExactPolynomial::monomial(ExactComplex(6) * q * a, 1) * u6;
    return inner * (ExactComplex(42) * q * q * a).inverse();
}

int exact_root_multiplicity(const ExactPolynomial& p, const ExactComplex& zeta) {
    int m = 0;
    ExactPolynomial d = p;
    while (!d.is_zero() && d(zeta).is_zero()) {
        ++m;
        d = d.derivative();
    }
    return m;
}

ExactMetrics exact_metrics(const ExactPolynomial& f, const std::vector<ExactComplex>& critical_points) {
    if (f.degree() < 2 || !is_in_class(f, f.degree())) throw NotInClass("polynomial must satisfy f(0) = 0, f'(0) = 1");
    if (critical_points.empty()) throw Error("no critical points supplied");
    const ExactPolynomial df = f.derivative();
    ExactMetrics out;
    int total = 0;
    for (std::size_t i = 0; i < critical_points.size(); ++i) {
        const ExactComplex& z = critical_points[i];
        for (std::size_t j = 0; j < i; ++j)
            if (critical_points[j] == z) throw Error("duplicate critical point " + z.to_string());
        const int m = exact_root_multiplicity(df, z);
        if (m == 0) throw Error(z.to_string() + " is not a critical point");
        total += m;
        ExactComplex ratio = f(z) / z;
        QSqrt3 rn = ratio.norm();
        out.points.push_back({z, m, std::move(ratio), std::move(rn), z.norm()});
    }
    if (total != f.degree() - 1) throw Error("critical point multiplicities do not exhaust deg f - 1");

    out.T_squared = out.S_squared = out.points.front().ratio_norm;
    out.alpha_squared = out.points.front().zeta_norm;
    for (const auto& p : out.points) {
        if (p.ratio_norm < out.T_squared) out.T_squared = p.ratio_norm;
        if (p.ratio_norm > out.S_squared) out.S_squared = p.ratio_norm;
        if (p.zeta_norm < out.alpha_squared) out.alpha_squared = p.zeta_norm;
    }
    bool first = true;
    for (const auto& p : out.points) {
        if (!(p.zeta_norm == out.alpha_squared)) continue;
        if (first || p.ratio_norm > out.lambda_squared) out.lambda_squared = p.ratio_norm;
        first = false;
    }
    return out;
}

ExactMetrics extremal_g1_metrics(const ExactComplex& a) {
    return exact_metrics(extremal_g1(a), {a.inverse()});
}

ExactMetrics extremal_g23_metrics(const ExactComplex& a, int sign) {
    const ExactComplex q = ExactComplex::sixth_root_of_unity(sign);
    return exact_metrics(extremal_g23(a, sign), {a.inverse(), (a * q).inverse()});
}

cplx random_in_disc(std::mt19937_64& rng, double radius) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const double r = radius * std::sqrt(u(rng));
    const double theta = 2.0 * std::acos(-1.0) * u(rng);
    return std::polar(r, theta);
}

ComplexPolynomial random_class_polynomial(int n, std::mt19937_64& rng, double radius) {
    if (n < 2) throw std::invalid_argument("class degree must be >= 2");
    std::vector<cplx> c(static_cast<std::size_t>(n) + 1);
    c[0] = 0.0;
    c[1] = 1.0;
    for (int k = 2; k <= n; ++k) c[static_cast<std::size_t>(k)] = random_in_disc(rng, radius);
    while (std::abs(c.back()) < 1e-3) c.back() = random_in_disc(rng, radius);
    return ComplexPolynomial(std::move(c));
}

}  // namespace dsmale
