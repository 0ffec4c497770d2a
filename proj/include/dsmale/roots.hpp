#pragma once

#include <complex>
#include <vector>

#include "dsmale/polynomial.hpp"

namespace dsmale {

struct Root {
    std::complex<double> value;
    int multiplicity = 1;
};

enum class RootMethod { Direct, Aberth, Companion };

struct RootSet {
    std::vector<Root> roots;
    /// Achieved relative backward error.  Every reported root r satisfies
    /// |p(r)| <= residual_bound * sum_k |c_k| |r|^k, and the polynomial rebuilt
    /// from the roots differs from p by at most residual_bound * max_k |c_k|
    /// in every coefficient.
    double residual_bound = 0.0;
    RootMethod method = RootMethod::Direct;
    int iterations = 0;

    int total_multiplicity() const;
};

struct RootOptions {
    /// Clustering tolerance: m approximations within tol^(1/m) * max(1, |c|)
    /// of their centroid c are merged into one root of multiplicity m.
    double tol = 1e-12;
    int max_iterations = 600;
    /// Skip the simultaneous iteration and go straight to the companion
    /// matrix eigenvalues.
    bool force_companion = false;
};

/// All complex roots of p with multiplicities.  Throws DegenerateInput for
/// constant p and NonConvergence if neither Aberth iteration nor the
/// companion eigen-solve reaches backward stability.
RootSet find_roots(const ComplexPolynomial& p, const RootOptions& opts);
RootSet find_roots(const ComplexPolynomial& p, double tol = 1e-12);

/// lc * prod (z - r)^m
ComplexPolynomial from_roots(std::complex<double> leading, const std::vector<Root>& roots);

}  // namespace dsmale
