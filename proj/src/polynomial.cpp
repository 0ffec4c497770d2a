#include "dsmale/polynomial.hpp"

#include <cmath>

namespace dsmale {

ComplexPolynomial to_numeric(const ExactPolynomial& p) {
    std::vector<std::complex<double>> c;
    c.reserve(p.coeffs().size());
    for (const auto& e : p.coeffs()) c.push_back(e.to_complex());
    return ComplexPolynomial(std::move(c));
}

bool is_in_class(const ExactPolynomial& p, int n) {
    return p.degree() == n && !p.is_zero() && p[0].is_zero() && p[1] == ExactComplex(1);
}

bool is_in_class(const ComplexPolynomial& p, int n, double tol) {
    if (p.is_zero() || p.degree() != n) return false;
    return std::abs(p[0]) <= tol && std::abs(p[1] - 1.0) <= tol;
}

}  // namespace dsmale
