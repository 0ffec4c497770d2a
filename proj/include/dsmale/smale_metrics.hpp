#pragma once

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "dsmale/exact.hpp"
#include "dsmale/polynomial.hpp"
#include "dsmale/roots.hpp"

namespace dsmale {

struct CriticalPoint {
    std::complex<double> zeta;
    int multiplicity = 1;
    std::complex<double> ratio;  // f(zeta) / zeta
};

struct CriticalSet {
    std::vector<CriticalPoint> points;
    double residual_bound = 0.0;
    ComplexPolynomial source;
};

struct MetricsReport {
    double T = 0.0;       ///< min |f(zeta)/zeta|
    double S = 0.0;       ///< max |f(zeta)/zeta|
    double alpha = 0.0;   ///< min |zeta|
    double lambda = 0.0;  ///< max |f(zeta)/zeta| over critical points with |zeta| = alpha
    CriticalSet critical;
};

/// Critical points on the minimal circle are those with |zeta| <= (1 + kLambdaTieTolerance) * alpha.
inline constexpr double kLambdaTieTolerance = 1e-8;

/// Throws NotInClass unless f has degree >= 2, f(0) = 0 and f'(0) = 1 (to class_tol).
CriticalSet critical_set(const ComplexPolynomial& f, double tol = 1e-12, double class_tol = 1e-9);
MetricsReport metrics(const ComplexPolynomial& f, double tol = 1e-12, double class_tol = 1e-9);

struct IntegralRatio {
    std::complex<double> value;       ///< termwise integral of f'(t w) over [0, 1]
    std::complex<double> quadrature;  ///< Gauss-Legendre value of the same integral
    std::complex<double> direct;      ///< f(w) / w
    double discrepancy = 0.0;         ///< max distance between the three routes, relative
    bool limit_at_zero = false;       ///< w == 0: value is the limit f'(0)
};

/// f(w)/w as the integral of f'(t w) over t in [0, 1].
IntegralRatio integral_ratio(const ComplexPolynomial& f, std::complex<double> w, int quad_points = 8);

struct DubininResult {
    double best_ratio = 0.0;  ///< max over critical zeta of |(f(z) - f(zeta)) / (z - zeta)|
    double bound = 0.0;       ///< (1/n) tan(pi / 4n) |f'(z)|
    bool pass = false;
};

DubininResult dubinin_check(const ComplexPolynomial& f, std::complex<double> z, double tol = 1e-12);
/// Same comparison with the stronger constant 1/n in place of tan(pi / 4n).
DubininResult dubinin_check_strong(const ComplexPolynomial& f, std::complex<double> z, double tol = 1e-12);

/// (1 / 7a) (1 - (1 - a z)^7)
ExactPolynomial extremal_g1(const ExactComplex& a);
/// (1 / (42 q^2 a)) ((7q - 1)(1 - (1 - a q z)^6) + 6 q a z (1 - a q z)^6) with q = exp(sign i pi/3).
ExactPolynomial extremal_g23(const ExactComplex& a, int sign);

/// Metrics computed exactly from an exactly known list of critical points.
/// All moduli are carried squared so they stay inside Q(sqrt 3).
struct ExactMetrics {
    struct Point {
        ExactComplex zeta;
        int multiplicity;
        ExactComplex ratio;
        QSqrt3 ratio_norm;  ///< |f(zeta)/zeta|^2
        QSqrt3 zeta_norm;   ///< |zeta|^2
    };
    std::vector<Point> points;
    QSqrt3 T_squared;
    QSqrt3 S_squared;
    QSqrt3 alpha_squared;
    QSqrt3 lambda_squared;
};

/// Verifies each candidate is an exact critical point, determines its exact
/// multiplicity, and checks the multiplicities exhaust deg f - 1.  Throws
/// Error if any of those checks fail.
ExactMetrics exact_metrics(const ExactPolynomial& f, const std::vector<ExactComplex>& critical_points);

/// exact_metrics of g_1 (critical point 1/a) and of g_{2,3} (critical points 1/a and 1/(a q)).
ExactMetrics extremal_g1_metrics(const ExactComplex& a);
ExactMetrics extremal_g23_metrics(const ExactComplex& a, int sign);

/// Multiplicity of zeta as a root of p (0 if not a root), exact.
int exact_root_multiplicity(const ExactPolynomial& p, const ExactComplex& zeta);

/// Random member of the degree-n class: c_2..c_n i.i.d. uniform on |c| <= radius,
/// c_n redrawn while |c_n| < 1e-3.
ComplexPolynomial random_class_polynomial(int n, std::mt19937_64& rng, double radius = 2.0);
std::complex<double> random_in_disc(std::mt19937_64& rng, double radius);

}  // namespace dsmale
