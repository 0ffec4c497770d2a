#include "dsmale/numeric_terms.hpp"

#include <cmath>
#include <stdexcept>

#include "dsmale/quadrature.hpp"

namespace dsmale::numeric {
namespace {

struct Vars {
    std::array<double, 5> x, y, d, b;

    explicit Vars(const std::array<double, 5>& phi) {
        for (std::size_t i = 0; i < 5; ++i) {
            x[i] = std::cos(phi[i]);
            y[i] = std::sin(phi[i]);
            d[i] = 1.0 - x[i];
            b[i] = 1.0 - 2.0 * x[i];
        }
    }
    // 1-based accessors
    double D(int i) const { return d[static_cast<std::size_t>(i - 1)]; }
    double B(int i) const { return b[static_cast<std::size_t>(i - 1)]; }
    double X(int i, int j) const { return x[static_cast<std::size_t>(i - 1)] - x[static_cast<std::size_t>(j - 1)]; }
    double Y(int i, int j) const { return y[static_cast<std::size_t>(i - 1)] - y[static_cast<std::size_t>(j - 1)]; }
};

double sq(double v) { return v * v; }

}  // namespace

std::complex<double> moment_integral(std::span<const double> angles, int extra_t_power) {
    static const QuadratureRule rule = gauss_legendre_unit(12);
    std::complex<double> acc = 0.0;
    for (std::size_t q = 0; q < rule.nodes.size(); ++q) {
        const double t = rule.nodes[q];
        std::complex<double> v = std::pow(t, extra_t_power) * (1.0 - t);
        for (double phi : angles) v *= 1.0 - std::polar(1.0, phi) * t;
        acc += rule.weights[q] * v;
    }
    return acc;
}

double S_squared(const std::array<double, 5>& angles) {
    return std::norm(moment_integral(angles, 0));
}

double g(const std::array<double, 5>& angles) {
    return 25200.0 * (S_squared(angles) - 1.0 / 49.0);
}

double J(int k, const std::array<double, 5>& angles, J2Reading reading) {
    const Vars v(angles);
    const auto& sets = IndexSets::instance();
    double s = 0.0;
    switch (k) {
        case 1: {
            double t1 = 0, t2 = 0, t3 = 0, t4 = 0, t5 = 0;
            for (const auto& p : sets.E1) {
                t1 += v.D(p[0]) * v.D(p[1]) * v.D(p[2]) * sq(v.Y(p[3], p[4]));
                t3 += sq(v.B(p[0]) + v.B(p[1]) + v.B(p[2])) * v.D(p[3]) * v.D(p[4]);
                t4 += v.D(p[0]) * v.D(p[1]) * v.D(p[2]) * sq(v.B(p[3]) + v.B(p[4]));
                t5 += (v.D(p[0]) + v.D(p[1]) + v.D(p[2])) *
                      (19.0 * sq(v.B(p[3])) * sq(v.B(p[4])) + 96.0 * sq(v.Y(p[3], p[4])));
            }
            for (const auto& e : sets.E2) t2 += sq(v.X(e[0], e[1])) * sq(v.Y(e[2], e[3]));
            s = 115.0 / 6.0 * t1 + 4.0 * t2 + 11.0 / 12.0 * t3 + 205.0 / 48.0 * t4 + t5 / 144.0;
            break;
        }
        case 2: {
            double g1 = 0, g2 = 0, g3 = 0, tail = 0;
            for (const auto& p : sets.E1) {
                g1 += 2.0 * (15.0 * v.D(p[0]) + 4.0) * (sq(v.Y(p[1], p[2])) * sq(v.Y(p[3], p[4])));
                g2 += 3.0 / 8.0 * v.D(p[0]) * sq(v.B(p[1]) + v.B(p[2]) + v.B(p[3]) + v.B(p[4]));
                g3 += 43.0 / 12.0 * sq(v.B(p[0])) * (v.D(p[1]) + v.D(p[2]) + v.D(p[3]) + v.D(p[4]));
            }
            for (const auto& u : sets.E4) tail += sq(v.B(u[0])) * v.D(u[1]) * v.D(u[2]) * v.D(u[3]);
            s = reading == J2Reading::PrefactorOnAllGroups ? (g1 + g2 + g3) / 16.0 : g1 / 16.0 + g2 + g3;
            s += 25.0 / 4.0 * tail;
            break;
        }
        case 3:
            for (const auto& e : sets.E2) s += sq(v.B(e[0]) * v.B(e[1]) - v.B(e[2]) * v.B(e[3]));
            s /= 4.0;
            break;
        case 4:
            for (const auto& t : sets.E3) s += 7.0 * sq(v.X(t[0], t[1])) + 10.0 * sq(v.Y(t[0], t[1]));
            s *= 2.0;
            break;
        case 5:
            for (const auto& p : sets.E1) {
                const double dd = v.D(p[3]) + v.D(p[4]);
                s += 7.0 * sq(v.B(p[0]) + v.B(p[1]) * v.B(p[2])) * dd +
                     720.0 * sq(v.D(p[0])) * sq(v.Y(p[1], p[2])) * dd;
            }
            s /= 192.0;
            break;
        default: throw std::out_of_range("J index must be 1..5");
    }
    return s;
}

double J_sum(const std::array<double, 5>& angles, J2Reading reading) {
    double s = 0.0;
    for (int k = 1; k <= 5; ++k) s += J(k, angles, reading);
    return s;
}

double a_squared(const std::array<double, 4>& angles) {
    return std::norm(moment_integral(angles, 1));
}

double b_squared(const std::array<double, 4>& angles) {
    return std::norm(moment_integral(angles, 0));
}

}  // namespace dsmale::numeric
