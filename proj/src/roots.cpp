#include "dsmale/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include <Eigen/Eigenvalues>

namespace dsmale {
namespace {

using cplx = std::complex<double>;
constexpr double kEps = std::numeric_limits<double>::epsilon();

struct HornerValue {
    cplx value;
    cplx deriv;
    double abs_scale;  // sum_k |c_k| |z|^k
};

HornerValue horner(const std::vector<cplx>& c, cplx z) {
    cplx v = 0.0;
    cplx d = 0.0;
    double s = 0.0;
    const double az = std::abs(z);
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        d = d * z + v;
        v = v * z + *it;
        s = s * az + std::abs(*it);
    }
    return {v, d, s};
}

double backward_error(const std::vector<cplx>& c, cplx z) {
    const HornerValue h = horner(c, z);
    if (h.abs_scale == 0.0) return 0.0;
    return std::abs(h.value) / h.abs_scale;
}

double stop_threshold(std::size_t degree) {
    return 4.0 * static_cast<double>(degree + 1) * kEps;
}

std::vector<cplx> initial_guesses(const std::vector<cplx>& c) {
    const std::size_t n = c.size() - 1;
    // Geometric mean of root moduli; c[0] != 0 after zero roots are stripped.
    double r = std::pow(std::abs(c[0]) / std::abs(c[n]), 1.0 / static_cast<double>(n));
    if (!std::isfinite(r) || r == 0.0) r = 1.0;
    std::vector<cplx> z(n);
    const double twopi = 2.0 * std::acos(-1.0);
    for (std::size_t k = 0; k < n; ++k) {
        z[k] = std::polar(r, twopi * static_cast<double>(k) / static_cast<double>(n) + 0.4);
    }
    return z;
}

/// Aberth-Ehrlich iteration, Gauss-Seidel style.  Returns true if every
/// approximation reached backward stability.
bool aberth(const std::vector<cplx>& c, std::vector<cplx>& z, int max_iter, int& iterations) {
    const std::size_t n = z.size();
    const double thresh = stop_threshold(n);
    std::vector<bool> frozen(n, false);
    for (iterations = 0; iterations < max_iter; ++iterations) {
        bool all_frozen = true;
        for (std::size_t i = 0; i < n; ++i) {
            if (frozen[i]) continue;
            const HornerValue h = horner(c, z[i]);
            if (std::abs(h.value) <= thresh * h.abs_scale) {
                frozen[i] = true;
                continue;
            }
            all_frozen = false;
            if (h.deriv == 0.0) {
                z[i] += cplx(1e-8, 1e-8) * std::max(1.0, std::abs(z[i]));
                continue;
            }
            const cplx ratio = h.value / h.deriv;
            cplx sum = 0.0;
            for (std::size_t j = 0; j < n; ++j) {
                if (j == i) continue;
                const cplx diff = z[i] - z[j];
                if (diff != 0.0) sum += 1.0 / diff;
            }
            const cplx denom = 1.0 - ratio * sum;
            z[i] -= denom != 0.0 ? ratio / denom : ratio;
        }
        if (all_frozen) return true;
    }
    return std::all_of(frozen.begin(), frozen.end(), [](bool f) { return f; });
}

std::vector<cplx> companion_eigenvalues(const std::vector<cplx>& c) {
    const auto n = static_cast<Eigen::Index>(c.size() - 1);
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
    for (Eigen::Index i = 1; i < n; ++i) m(i, i - 1) = 1.0;
    for (Eigen::Index i = 0; i < n; ++i) m(i, n - 1) = -c[static_cast<std::size_t>(i)] / c.back();
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(m, false);
    std::vector<cplx> out(static_cast<std::size_t>(n));
    for (Eigen::Index i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = es.eigenvalues()(i);
    return out;
}

std::vector<cplx> differentiate(const std::vector<cplx>& c, int times) {
    std::vector<cplx> d = c;
    for (int t = 0; t < times && d.size() > 1; ++t) {
        std::vector<cplx> next(d.size() - 1);
        for (std::size_t k = 1; k < d.size(); ++k) next[k - 1] = d[k] * static_cast<double>(k);
        d = std::move(next);
    }
    return d;
}

/// Newton on the (m-1)-th derivative, where an m-fold root is simple.
cplx polish(const std::vector<cplx>& c, cplx start, int multiplicity, double radius) {
    const std::vector<cplx> d = differentiate(c, multiplicity - 1);
    cplx z = start;
    double best = backward_error(d, z);
    for (int it = 0; it < 8; ++it) {
        const HornerValue h = horner(d, z);
        if (h.deriv == 0.0) break;
        const cplx next = z - h.value / h.deriv;
        const double be = backward_error(d, next);
        if (!(be < best) || std::abs(next - start) > radius) break;
        z = next;
        best = be;
    }
    return z;
}

std::vector<Root> cluster(const std::vector<cplx>& c, const std::vector<cplx>& approx, double tol) {
    std::vector<std::size_t> avail(approx.size());
    std::iota(avail.begin(), avail.end(), 0);
    std::vector<Root> out;

    while (!avail.empty()) {
        std::size_t best_m = 1;
        double best_spread = 0.0;
        std::vector<std::size_t> best_members;
        cplx best_center;

        for (std::size_t seed : avail) {
            std::vector<std::size_t> order = avail;
            std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
                const double da = std::abs(approx[a] - approx[seed]);
                const double db = std::abs(approx[b] - approx[seed]);
                return da != db ? da < db : a < b;
            });
            for (std::size_t m = order.size(); m >= 2 && m >= best_m; --m) {
                cplx center = 0.0;
                for (std::size_t k = 0; k < m; ++k) center += approx[order[k]];
                center /= static_cast<double>(m);
                double spread = 0.0;
                for (std::size_t k = 0; k < m; ++k) spread = std::max(spread, std::abs(approx[order[k]] - center));
                const double radius = std::pow(tol, 1.0 / static_cast<double>(m)) * std::max(1.0, std::abs(center));
                if (spread <= radius) {
                    if (m > best_m || (m == best_m && spread < best_spread)) {
                        best_m = m;
                        best_spread = spread;
                        best_center = center;
                        best_members.assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(m));
                    }
                    break;
                }
            }
        }

        if (best_m == 1) {
            for (std::size_t i : avail) out.push_back({approx[i], 1});
            break;
        }
        const double radius =
            std::pow(tol, 1.0 / static_cast<double>(best_m)) * std::max(1.0, std::abs(best_center));
        out.push_back({polish(c, best_center, static_cast<int>(best_m), radius), static_cast<int>(best_m)});
        std::vector<std::size_t> rest;
        for (std::size_t i : avail)
            if (std::find(best_members.begin(), best_members.end(), i) == best_members.end()) rest.push_back(i);
        avail = std::move(rest);
    }

    std::sort(out.begin(), out.end(), [](const Root& a, const Root& b) {
        if (a.value.real() != b.value.real()) return a.value.real() < b.value.real();
        return a.value.imag() < b.value.imag();
    });
    return out;
}

}  // namespace

int RootSet::total_multiplicity() const {
    int s = 0;
    for (const auto& r : roots) s += r.multiplicity;
    return s;
}

ComplexPolynomial from_roots(std::complex<double> leading, const std::vector<Root>& roots) {
    ComplexPolynomial p = ComplexPolynomial::constant(leading);
    for (const auto& r : roots) {
        const ComplexPolynomial factor{-r.value, cplx(1.0)};
        for (int k = 0; k < r.multiplicity; ++k) p = p * factor;
    }
    return p;
}

RootSet find_roots(const ComplexPolynomial& p, double tol) {
    RootOptions opts;
    opts.tol = tol;
    return find_roots(p, opts);
}

RootSet find_roots(const ComplexPolynomial& p, const RootOptions& opts) {
    if (p.is_zero()) throw DegenerateInput("zero polynomial has no well-defined roots");
    if (p.degree() == 0) throw DegenerateInput("constant polynomial has no roots");
    if (!(opts.tol > 0.0)) throw std::invalid_argument("root tolerance must be positive");

    RootSet rs;
    const auto& full = p.coeffs();
    std::size_t zeros = 0;
    while (full[zeros] == 0.0) ++zeros;
    std::vector<cplx> c(full.begin() + static_cast<std::ptrdiff_t>(zeros), full.end());

    std::vector<Root> found;
    if (zeros > 0) found.push_back({0.0, static_cast<int>(zeros)});

    const std::size_t n = c.size() - 1;
    if (n == 1) {
        found.push_back({-c[0] / c[1], 1});
        rs.method = RootMethod::Direct;
    } else if (n > 1) {
        std::vector<cplx> approx = initial_guesses(c);
        bool ok = false;
        if (!opts.force_companion) {
            ok = aberth(c, approx, opts.max_iterations, rs.iterations);
            rs.method = RootMethod::Aberth;
        }
        if (!ok) {
            std::vector<cplx> eig = companion_eigenvalues(c);
            // Newton-polish simple eigenvalue approximations.
            for (auto& z : eig) {
                for (int it = 0; it < 3; ++it) {
                    const HornerValue h = horner(c, z);
                    if (h.deriv == 0.0) break;
                    const cplx next = z - h.value / h.deriv;
                    if (backward_error(c, next) >= backward_error(c, z)) break;
                    z = next;
                }
            }
            rs.method = RootMethod::Companion;
            const double worst = std::accumulate(eig.begin(), eig.end(), 0.0, [&](double acc, cplx z) {
                return std::max(acc, backward_error(c, z));
            });
            // Eigenvalues are backward stable for the companion matrix, which
            // is looser than coefficient-wise stability; allow some slack.
            if (!(worst <= 1e6 * stop_threshold(n))) {
                throw NonConvergence("root finder did not reach backward stability", ok ? approx : eig);
            }
            approx = std::move(eig);
        }
        std::vector<Root> clustered = cluster(c, approx, opts.tol);
        found.insert(found.end(), clustered.begin(), clustered.end());
    }

    rs.roots = std::move(found);

    double bound = kEps;
    for (const auto& r : rs.roots) bound = std::max(bound, backward_error(full, r.value));
    const ComplexPolynomial rebuilt = from_roots(p.leading(), rs.roots);
    double cmax = 0.0;
    for (const auto& v : full) cmax = std::max(cmax, std::abs(v));
    double diff = 0.0;
    for (std::size_t k = 0; k < full.size(); ++k) diff = std::max(diff, std::abs(rebuilt[k] - full[k]));
    bound = std::max(bound, diff / cmax);
    rs.residual_bound = bound;
    return rs;
}

}  // namespace dsmale
