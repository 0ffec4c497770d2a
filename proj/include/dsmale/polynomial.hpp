#pragma once

// Dense univariate polynomials over a coefficient field T.  Two
// instantiations are used throughout: ComplexPolynomial (double precision)
// for sampling and root finding, ExactPolynomial (coefficients in
// Q(i, sqrt 3)) for the closed-form extremal cases.

#include <complex>
#include <cstddef>
#include <utility>
#include <vector>

#include "dsmale/error.hpp"
#include "dsmale/exact.hpp"

namespace dsmale {

template <class T>
class Polynomial {
public:
    using value_type = T;

    Polynomial() = default;
    explicit Polynomial(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
    Polynomial(std::initializer_list<T> coeffs) : coeffs_(coeffs) { trim(); }

    static Polynomial constant(T c) { return Polynomial(std::vector<T>{std::move(c)}); }

    static Polynomial monomial(T c, std::size_t k) {
        std::vector<T> v(k + 1, T(0));
        v[k] = std::move(c);
        return Polynomial(std::move(v));
    }

    /// Coefficients, index k holds the coefficient of z^k.  Empty for zero.
    const std::vector<T>& coeffs() const { return coeffs_; }

    bool is_zero() const { return coeffs_.empty(); }

    /// Index of the last nonzero coefficient; 0 for the zero polynomial.
    int degree() const { return coeffs_.empty() ? 0 : static_cast<int>(coeffs_.size()) - 1; }

    T operator[](std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : T(0); }

    const T& leading() const { return coeffs_.back(); }

    /// Horner evaluation.
    template <class U>
    U operator()(const U& z) const {
        U acc(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            acc = acc * z + U(*it);
        }
        return acc;
    }

    Polynomial derivative() const {
        if (coeffs_.size() <= 1) return {};
        std::vector<T> d(coeffs_.size() - 1);
        for (std::size_t k = 1; k < coeffs_.size(); ++k) {
            d[k - 1] = coeffs_[k] * T(static_cast<long>(k));
        }
        return Polynomial(std::move(d));
    }

    Polynomial& operator+=(const Polynomial& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), T(0));
        for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
        trim();
        return *this;
    }

    Polynomial& operator-=(const Polynomial& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), T(0));
        for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
        trim();
        return *this;
    }

    Polynomial& operator*=(const T& s) {
        for (auto& c : coeffs_) c *= s;
        trim();
        return *this;
    }

    friend Polynomial operator+(Polynomial l, const Polynomial& r) { return l += r; }
    friend Polynomial operator-(Polynomial l, const Polynomial& r) { return l -= r; }
    friend Polynomial operator*(Polynomial l, const T& s) { return l *= s; }
    friend Polynomial operator*(const T& s, Polynomial r) { return r *= s; }

    friend Polynomial operator*(const Polynomial& l, const Polynomial& r) {
        if (l.is_zero() || r.is_zero()) return {};
        std::vector<T> out(l.coeffs_.size() + r.coeffs_.size() - 1, T(0));
        for (std::size_t i = 0; i < l.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < r.coeffs_.size(); ++j) out[i + j] += l.coeffs_[i] * r.coeffs_[j];
        return Polynomial(std::move(out));
    }

    friend bool operator==(const Polynomial& l, const Polynomial& r) { return l.coeffs_ == r.coeffs_; }

private:
    void trim() {
        while (!coeffs_.empty() && is_exact_zero(coeffs_.back())) coeffs_.pop_back();
    }

    std::vector<T> coeffs_;
};

using ComplexPolynomial = Polynomial<std::complex<double>>;
using ExactPolynomial = Polynomial<ExactComplex>;

template <class T>
Polynomial<T> pow(const Polynomial<T>& p, unsigned n) {
    Polynomial<T> out = Polynomial<T>::constant(T(1));
    for (unsigned k = 0; k < n; ++k) out = out * p;
    return out;
}

template <class T, class U>
U eval(const Polynomial<T>& p, const U& z) {
    return p(z);
}

template <class T>
Polynomial<T> derivative(const Polynomial<T>& p) {
    return p.derivative();
}

/// q(z) = p(a z) / a, i.e. c_k -> a^(k-1) c_k.  Preserves membership in the
/// normalized class f(0) = 0, f'(0) = 1.
template <class T>
Polynomial<T> rescale(const Polynomial<T>& p, const T& a) {
    if (is_exact_zero(a)) throw ZeroScale();
    std::vector<T> out(p.coeffs().size());
    const T inv = T(1) / a;
    T power = inv;  // a^(k-1) starting at k = 0
    for (std::size_t k = 0; k < out.size(); ++k) {
        out[k] = p.coeffs()[k] * power;
        power *= a;
    }
    return Polynomial<T>(std::move(out));
}

ComplexPolynomial to_numeric(const ExactPolynomial& p);

/// Exact membership test: degree n, f(0) = 0, f'(0) = 1.
bool is_in_class(const ExactPolynomial& p, int n);

/// Floating-point membership test with absolute tolerance on c_0 and c_1.
bool is_in_class(const ComplexPolynomial& p, int n, double tol = 1e-12);

}  // namespace dsmale
