#include "dsmale/exact.hpp"

#include <cmath>
#include <stdexcept>

#include "dsmale/error.hpp"

namespace dsmale {

Rational parse_rational(const std::string& text) {
    Rational q;
    if (text.empty() || q.set_str(text, 10) != 0) {
        throw Error("not a rational number: '" + text + "'");
    }
    if (q.get_den() == 0) {
        throw Error("zero denominator: '" + text + "'");
    }
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) {
    return q.get_str();
}

int sign(const Rational& q) {
    return sgn(q);
}

int QSqrt3::sign() const {
    const int sa = sgn(a_);
    const int sb = sgn(b_);
    if (sb == 0) return sa;
    if (sa == 0 || sa == sb) return sb;
    // Opposite signs: compare a^2 against 3 b^2.
    const Rational lhs = a_ * a_;
    const Rational rhs = 3 * b_ * b_;
    const int c = cmp(lhs, rhs);
    return c > 0 ? sa : sb;
}

QSqrt3 QSqrt3::inverse() const {
    if (is_zero()) throw std::domain_error("QSqrt3: division by zero");
    const Rational n = a_ * a_ - 3 * b_ * b_;
    return {a_ / n, -b_ / n};
}

double QSqrt3::to_double() const {
    return a_.get_d() + b_.get_d() * std::sqrt(3.0);
}

std::string QSqrt3::to_string() const {
    if (sgn(b_) == 0) return a_.get_str();
    std::string s;
    if (sgn(a_) != 0) s = a_.get_str() + (sgn(b_) > 0 ? " + " : " - ");
    else if (sgn(b_) < 0) s = "-";
    Rational mag = abs(b_);
    if (mag != 1) s += mag.get_str() + "*";
    return s + "sqrt(3)";
}

QSqrt3& QSqrt3::operator+=(const QSqrt3& o) {
    a_ += o.a_;
    b_ += o.b_;
    return *this;
}

QSqrt3& QSqrt3::operator-=(const QSqrt3& o) {
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
}

QSqrt3& QSqrt3::operator*=(const QSqrt3& o) {
    Rational a = a_ * o.a_ + 3 * b_ * o.b_;
    Rational b = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(a);
    b_ = std::move(b);
    return *this;
}

QSqrt3& QSqrt3::operator/=(const QSqrt3& o) {
    return *this *= o.inverse();
}

ExactComplex ExactComplex::sixth_root_of_unity(int sign) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
    return {QSqrt3(Rational(1, 2)), QSqrt3(Rational(0), Rational(sign, 2))};
}

ExactComplex ExactComplex::inverse() const {
    if (is_zero()) throw std::domain_error("ExactComplex: division by zero");
    const QSqrt3 n_inv = norm().inverse();
    return {re_ * n_inv, -im_ * n_inv};
}

std::string ExactComplex::to_string() const {
    if (im_.is_zero()) return re_.to_string();
    return "(" + re_.to_string() + ") + i*(" + im_.to_string() + ")";
}

ExactComplex& ExactComplex::operator+=(const ExactComplex& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

ExactComplex& ExactComplex::operator-=(const ExactComplex& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

ExactComplex& ExactComplex::operator*=(const ExactComplex& o) {
    QSqrt3 re = re_ * o.re_ - im_ * o.im_;
    QSqrt3 im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

ExactComplex& ExactComplex::operator/=(const ExactComplex& o) {
    return *this *= o.inverse();
}

}  // namespace dsmale
