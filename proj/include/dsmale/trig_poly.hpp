#pragma once

// Exact polynomials in x_i = cos(phi_i), y_i = sin(phi_i), i = 1..5, with
// rational coefficients, kept in the normal form where every y_i appears at
// most to the first power (y_i^2 is rewritten as 1 - x_i^2).  The normal form
// is unique, so structural equality decides equality as functions on the
// torus.

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <type_traits>
#include <vector>

#include "dsmale/exact.hpp"

namespace dsmale {

inline constexpr int kAngleVars = 5;

struct TrigMonomial {
    std::array<std::uint8_t, kAngleVars> x{};  // exponents of x_1..x_5
    std::uint8_t y = 0;                        // bit i set: y_{i+1} present

    int degree() const;
    bool has_y(int i) const { return (y >> (i - 1)) & 1U; }
    std::uint64_t key() const;

    /// Graded lexicographic: total degree, then (ex_1..ex_5, ey_1..ey_5).
    friend std::strong_ordering operator<=>(const TrigMonomial& a, const TrigMonomial& b);
    friend bool operator==(const TrigMonomial& a, const TrigMonomial& b) = default;
};

class TrigPoly {
public:
    using TermMap = std::map<TrigMonomial, Rational>;

    TrigPoly() = default;
    TrigPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
    TrigPoly(long c) : TrigPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)

    /// cos(phi_i), sin(phi_i); i in 1..5, BadIndex otherwise.
    static TrigPoly x(int i);
    static TrigPoly y(int i);

    const TermMap& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    Rational coefficient(const TrigMonomial& m) const;
    bool has_y() const;
    /// Highest index i such that x_i or y_i occurs (0 for constants).
    int max_variable() const;

    /// Part multiplying the y-monomial `ymask` exactly, as an x-only polynomial.
    TrigPoly y_coefficient(std::uint8_t ymask) const;

    TrigPoly& operator+=(const TrigPoly& o);
    TrigPoly& operator-=(const TrigPoly& o);
    TrigPoly& operator*=(const Rational& s);
    friend TrigPoly operator+(TrigPoly l, const TrigPoly& r) { return l += r; }
    friend TrigPoly operator-(TrigPoly l, const TrigPoly& r) { return l -= r; }
    friend TrigPoly operator*(TrigPoly l, const Rational& s) { return l *= s; }
    friend TrigPoly operator*(const Rational& s, TrigPoly r) { return r *= s; }
    friend TrigPoly operator-(const TrigPoly& p) { return p * Rational(-1); }
    /// Product, reduced with y_i^2 = 1 - x_i^2.
    friend TrigPoly operator*(const TrigPoly& l, const TrigPoly& r);
    friend bool operator==(const TrigPoly& l, const TrigPoly& r) { return l.terms_ == r.terms_; }

    /// Numeric value at angles phi_1..phi_5.
    double eval_at(const std::array<double, kAngleVars>& angles) const;

    /// Value with x_i = xs[i-1], y_i = ys[i-1] in any field F constructible
    /// from a Rational (double, Rational, QSqrt3).  The caller is responsible
    /// for x_i^2 + y_i^2 = 1 if the value is to mean anything.
    template <class F>
    F evaluate(const std::array<F, kAngleVars>& xs, const std::array<F, kAngleVars>& ys) const;

    /// Renames variable i to perm[i-1] (perm is a permutation of 1..5).
    TrigPoly permuted(const std::array<int, kAngleVars>& perm) const;
    /// phi -> -phi, i.e. y_i -> -y_i.
    TrigPoly conjugated() const;
    /// Re-applies the y_i^2 rewrite; the identity on values built through
    /// the public interface.
    TrigPoly reduced() const;

    /// One term per line: "num/den : ex1 ex2 ex3 ex4 ex5 ey1 ey2 ey3 ey4 ey5",
    /// in graded lex order.  max_terms = 0 for all terms.
    std::string to_text(std::size_t max_terms = 0) const;
    static TrigPoly from_text(const std::string& text);

    /// Adds c * m without normalizing y exponents (m.y is already a mask).
    void add_term(const TrigMonomial& m, const Rational& c);

private:
    TermMap terms_;
};

TrigPoly pow(const TrigPoly& p, unsigned n);

/// x_i - x_j, y_i - y_j (i != j), 1 - x_i, 1 - 2 x_i.
TrigPoly x_diff(int i, int j);
TrigPoly y_diff(int i, int j);
TrigPoly d_sym(int i);
TrigPoly b_sym(int i);

enum class Symbol { Constant, X, Y, XDiff, YDiff, D, B };
/// Single entry point for the named symbols; `i`, `j` are 1-based.  For
/// Symbol::Constant the value is `i`.
TrigPoly make(Symbol s, int i = 0, int j = 0);

namespace detail {
template <class F>
F from_rational(const Rational& q) {
    if constexpr (std::is_same_v<F, double>) {
        return q.get_d();
    } else {
        return F(q);
    }
}
}  // namespace detail

template <class F>
F TrigPoly::evaluate(const std::array<F, kAngleVars>& xs, const std::array<F, kAngleVars>& ys) const {
    F total = detail::from_rational<F>(Rational(0));
    for (const auto& [m, c] : terms_) {
        F term = detail::from_rational<F>(c);
        for (int i = 0; i < kAngleVars; ++i) {
            for (int e = 0; e < m.x[static_cast<std::size_t>(i)]; ++e) term = term * xs[static_cast<std::size_t>(i)];
            if ((m.y >> i) & 1U) term = term * ys[static_cast<std::size_t>(i)];
        }
        total = total + term;
    }
    return total;
}

}  // namespace dsmale
