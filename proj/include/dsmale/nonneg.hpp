#pragma once

// Values that are nonnegative by construction.  A Nonneg<P> can only be
// produced from squares, from atoms known to be nonnegative on the domain
// (d_i = 1 - cos(phi_i) on the torus, w_k on [0,1]^4), from nonnegative
// rational constants, and by adding or multiplying such values.  The
// `shape` string records the construction for reports.

#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "dsmale/box_poly.hpp"
#include "dsmale/error.hpp"
#include "dsmale/exact.hpp"
#include "dsmale/trig_poly.hpp"

namespace dsmale {

template <class P>
class Nonneg {
public:
    const P& value() const { return value_; }
    const std::string& shape() const { return shape_; }

    static Nonneg square(const P& p, std::string label) { return Nonneg(p * p, "(" + std::move(label) + ")^2"); }

    static Nonneg constant(const Rational& c, const P& one) {
        if (sgn(c) < 0) throw Error("negative constant cannot certify nonnegativity");
        return Nonneg(one * c, c.get_str());
    }

    Nonneg scaled(const Rational& c) const {
        if (sgn(c) < 0) throw Error("negative scale cannot certify nonnegativity");
        return Nonneg(value_ * c, c.get_str() + "*" + wrap(shape_));
    }

    friend Nonneg operator+(const Nonneg& l, const Nonneg& r) {
        return Nonneg(l.value_ + r.value_, l.shape_ + " + " + r.shape_);
    }

    friend Nonneg operator*(const Nonneg& l, const Nonneg& r) {
        return Nonneg(l.value_ * r.value_, wrap(l.shape_) + "*" + wrap(r.shape_));
    }

    /// Sum of a family of certified terms, labelled by its index set.
    static Nonneg sum(const std::vector<Nonneg>& items, const std::string& label, const P& zero) {
        P total = zero;
        for (const auto& it : items) total += it.value_;
        std::string shape = "sum_" + label + "[" + std::to_string(items.size()) + "]";
        if (!items.empty()) shape += "{" + items.front().shape_ + "}";
        return Nonneg(std::move(total), std::move(shape));
    }

    /// Atoms, each nonnegative on its domain.
    static Nonneg atom_d(int i)
        requires std::is_same_v<P, TrigPoly>
    {
        return Nonneg(d_sym(i), "d" + std::to_string(i));
    }

    static Nonneg atom_w(int k)
        requires std::is_same_v<P, BoxPoly>
    {
        return Nonneg(BoxPoly::var(k, BoxDomain::Unit), "w" + std::to_string(k));
    }

private:
    Nonneg(P value, std::string shape) : value_(std::move(value)), shape_(std::move(shape)) {}

    static std::string wrap(const std::string& s) {
        return s.find(" + ") == std::string::npos ? s : "(" + s + ")";
    }

    P value_;
    std::string shape_;
};

using TrigNonneg = Nonneg<TrigPoly>;
using BoxNonneg = Nonneg<BoxPoly>;

}  // namespace dsmale
