#pragma once

// Exact scalar types: big rationals, the real field Q(sqrt 3), and complex
// numbers whose real and imaginary parts lie in Q(sqrt 3).  The latter field
// contains both the Gaussian rationals and the sixth roots of unity
// (1 +- i sqrt 3) / 2, so every closed-form extremal polynomial lives in it.

#include <complex>
#include <string>

#include <gmpxx.h>

namespace dsmale {

using Rational = mpq_class;

Rational parse_rational(const std::string& text);
std::string to_string(const Rational& q);
int sign(const Rational& q);

/// a + b * sqrt(3) with rational a, b.
class QSqrt3 {
public:
    QSqrt3() = default;
    QSqrt3(long v) : a_(v) {}  // NOLINT(google-explicit-constructor)
    QSqrt3(Rational a) : a_(std::move(a)) {}  // NOLINT(google-explicit-constructor)
    QSqrt3(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

    static QSqrt3 sqrt3() { return {Rational(0), Rational(1)}; }

    const Rational& rational_part() const { return a_; }
    const Rational& sqrt3_part() const { return b_; }

    bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
    bool is_rational() const { return sgn(b_) == 0; }

    /// Exact sign of a + b sqrt 3.
    int sign() const;

    /// Conjugate under sqrt 3 -> -sqrt 3.
    QSqrt3 galois_conjugate() const { return {a_, -b_}; }
    QSqrt3 inverse() const;

    double to_double() const;
    std::string to_string() const;

    QSqrt3& operator+=(const QSqrt3& o);
    QSqrt3& operator-=(const QSqrt3& o);
    QSqrt3& operator*=(const QSqrt3& o);
    QSqrt3& operator/=(const QSqrt3& o);

    friend QSqrt3 operator+(QSqrt3 l, const QSqrt3& r) { return l += r; }
    friend QSqrt3 operator-(QSqrt3 l, const QSqrt3& r) { return l -= r; }
    friend QSqrt3 operator*(QSqrt3 l, const QSqrt3& r) { return l *= r; }
    friend QSqrt3 operator/(QSqrt3 l, const QSqrt3& r) { return l /= r; }
    friend QSqrt3 operator-(const QSqrt3& v) { return {-v.a_, -v.b_}; }
    friend bool operator==(const QSqrt3& l, const QSqrt3& r) { return l.a_ == r.a_ && l.b_ == r.b_; }
    friend bool operator<(const QSqrt3& l, const QSqrt3& r) { return (l - r).sign() < 0; }
    friend bool operator>(const QSqrt3& l, const QSqrt3& r) { return r < l; }
    friend bool operator<=(const QSqrt3& l, const QSqrt3& r) { return !(r < l); }
    friend bool operator>=(const QSqrt3& l, const QSqrt3& r) { return !(l < r); }

private:
    Rational a_{0};
    Rational b_{0};
};

/// re + i * im with re, im in Q(sqrt 3).
class ExactComplex {
public:
    ExactComplex() = default;
    ExactComplex(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
    ExactComplex(Rational re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
    ExactComplex(QSqrt3 re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
    ExactComplex(QSqrt3 re, QSqrt3 im) : re_(std::move(re)), im_(std::move(im)) {}

    static ExactComplex i() { return {QSqrt3(0), QSqrt3(1)}; }
    /// The primitive sixth root of unity exp(sign * i pi / 3) = (1 + sign i sqrt 3) / 2.
    static ExactComplex sixth_root_of_unity(int sign);

    const QSqrt3& real() const { return re_; }
    const QSqrt3& imag() const { return im_; }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    ExactComplex conj() const { return {re_, -im_}; }
    /// |z|^2, exact.
    QSqrt3 norm() const { return re_ * re_ + im_ * im_; }
    ExactComplex inverse() const;

    std::complex<double> to_complex() const { return {re_.to_double(), im_.to_double()}; }
    std::string to_string() const;

    ExactComplex& operator+=(const ExactComplex& o);
    ExactComplex& operator-=(const ExactComplex& o);
    ExactComplex& operator*=(const ExactComplex& o);
    ExactComplex& operator/=(const ExactComplex& o);

    friend ExactComplex operator+(ExactComplex l, const ExactComplex& r) { return l += r; }
    friend ExactComplex operator-(ExactComplex l, const ExactComplex& r) { return l -= r; }
    friend ExactComplex operator*(ExactComplex l, const ExactComplex& r) { return l *= r; }
    friend ExactComplex operator/(ExactComplex l, const ExactComplex& r) { return l /= r; }
    friend ExactComplex operator-(const ExactComplex& v) { return {-v.re_, -v.im_}; }
    friend bool operator==(const ExactComplex& l, const ExactComplex& r) {
        return l.re_ == r.re_ && l.im_ == r.im_;
    }

private:
    QSqrt3 re_;
    QSqrt3 im_;
};

inline bool is_exact_zero(const ExactComplex& z) { return z.is_zero(); }
inline bool is_exact_zero(const std::complex<double>& z) { return z == std::complex<double>(0.0, 0.0); }

inline std::complex<double> to_complex(const ExactComplex& z) { return z.to_complex(); }
inline std::complex<double> to_complex(const std::complex<double>& z) { return z; }

}  // namespace dsmale
