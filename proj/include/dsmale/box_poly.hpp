#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "dsmale/exact.hpp"
#include "dsmale/trig_poly.hpp"

namespace dsmale {

inline constexpr int kBoxVars = 4;

/// [0,1]^4 for the w-variables, [-1,1]^4 for the x-variables.
enum class BoxDomain { Unit, Symmetric };

struct BoxMonomial {
    std::array<std::uint8_t, kBoxVars> e{};

    int degree() const;
    friend std::strong_ordering operator<=>(const BoxMonomial& a, const BoxMonomial& b);
    friend bool operator==(const BoxMonomial& a, const BoxMonomial& b) = default;
};

/// Sparse polynomial in four real variables over a box.
class BoxPoly {
public:
    using TermMap = std::map<BoxMonomial, Rational>;

    explicit BoxPoly(BoxDomain domain = BoxDomain::Unit) : domain_(domain) {}
    BoxPoly(const Rational& c, BoxDomain domain);

    /// The k-th coordinate, k in 1..4.
    static BoxPoly var(int k, BoxDomain domain);

    BoxDomain domain() const { return domain_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    Rational coefficient(const BoxMonomial& m) const;
    Rational constant_term() const { return coefficient(BoxMonomial{}); }
    /// 1-based indices of variables that occur.
    std::vector<int> variables() const;
    int degree_in(int k) const;
    int total_degree() const;

    BoxPoly& operator+=(const BoxPoly& o);
    BoxPoly& operator-=(const BoxPoly& o);
    BoxPoly& operator*=(const Rational& s);
    friend BoxPoly operator+(BoxPoly l, const BoxPoly& r) { return l += r; }
    friend BoxPoly operator-(BoxPoly l, const BoxPoly& r) { return l -= r; }
    friend BoxPoly operator*(BoxPoly l, const Rational& s) { return l *= s; }
    friend BoxPoly operator*(const Rational& s, BoxPoly r) { return r *= s; }
    friend BoxPoly operator*(const BoxPoly& l, const BoxPoly& r);
    friend bool operator==(const BoxPoly& l, const BoxPoly& r) {
        return l.domain_ == r.domain_ && l.terms_ == r.terms_;
    }

    double eval(const std::array<double, kBoxVars>& v) const;
    Rational eval_exact(const std::array<Rational, kBoxVars>& v) const;

    std::string to_text() const;
    void add_term(const BoxMonomial& m, const Rational& c);

private:
    BoxDomain domain_;
    TermMap terms_;
};

BoxPoly pow(const BoxPoly& p, unsigned n);

/// Substitutes x_k = 1 - 2 w_k.  Throws ResidualYVariable if p contains any
/// y_i and UnsupportedShape if x_5 occurs.
BoxPoly substitute_box(const TrigPoly& p);

/// The same y-free polynomial viewed over [-1,1]^4 in the x-variables.
BoxPoly x_only(const TrigPoly& p);

struct BoxMinimum {
    Rational value;
    std::array<Rational, kBoxVars> argmin;
    std::string location;  // "corner", "edge", "interior"
};

/// Exact minimum over the polynomial's box of a polynomial of total degree
/// <= 2 in at most two variables: corners, edge stationary points and the
/// interior stationary point are enumerated.  Throws UnsupportedShape
/// otherwise.
BoxMinimum box_quadratic_min(const BoxPoly& p);

}  // namespace dsmale
