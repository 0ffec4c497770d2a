#pragma once

// Floating-point evaluation of the certificate quantities straight from their
// defining integrals and sums.  Shares nothing with the TrigPoly route and
// serves as its numeric oracle.

#include <array>
#include <complex>
#include <span>

#include "dsmale/certificate.hpp"

namespace dsmale::numeric {

/// integral_0^1 t^extra (1-t) prod_j (1 - e^{i phi_j} t) dt by Gauss-Legendre
/// quadrature (exact for the polynomial integrand).
std::complex<double> moment_integral(std::span<const double> angles, int extra_t_power);

double S_squared(const std::array<double, 5>& angles);
double g(const std::array<double, 5>& angles);
double J(int k, const std::array<double, 5>& angles, J2Reading reading = J2Reading::PrefactorOnAllGroups);
double J_sum(const std::array<double, 5>& angles, J2Reading reading = J2Reading::PrefactorOnAllGroups);

/// |a|^2 and |b|^2 of the four-variable lemma.
double a_squared(const std::array<double, 4>& angles);
double b_squared(const std::array<double, 4>& angles);

}  // namespace dsmale::numeric
