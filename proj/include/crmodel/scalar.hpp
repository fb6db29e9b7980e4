#pragma once

#include <gmpxx.h>

#include <complex>
#include <string>

namespace crmodel {

// Arbitrary-precision rational, always kept canonical (reduced, den > 0).
using Rational = mpq_class;

Rational ratio(long num, long den = 1);
Rational parse_rational(const std::string& text);
std::string rational_str(const Rational& q);
double to_double(const Rational& q);

// Element of the real quadratic field Q(sqrt2): r + s*sqrt2.
struct Quad {
    Rational r{0};
    Rational s{0};

    Quad() = default;
    Quad(const Rational& rat) : r(rat) {}
    Quad(long n) : r(ratio(n)) {}
    Quad(const Rational& rat, const Rational& rad) : r(rat), s(rad) {}

    static Quad sqrt2() { return Quad(ratio(0), ratio(1)); }

    bool is_zero() const { return r == 0 && s == 0; }
    bool is_rational() const { return s == 0; }

    Quad operator-() const { return Quad(-r, -s); }
    Quad operator+(const Quad& o) const { return Quad(r + o.r, s + o.s); }
    Quad operator-(const Quad& o) const { return Quad(r - o.r, s - o.s); }
    Quad operator*(const Quad& o) const;
    Quad operator/(const Quad& o) const;
    bool operator==(const Quad& o) const { return r == o.r && s == o.s; }

    Quad inverse() const;

    // Exact sign of r + s*sqrt2, decided from the signs of r, s and a
    // comparison of r^2 with 2 s^2.
    int sign() const;

    double to_double() const;
    std::string str() const;
};

// Element of Q(i)[sqrt2]: re + im*i with re, im in Q(sqrt2).
// Canonical by construction; components stay reduced rationals.
class ExactScalar {
public:
    ExactScalar() = default;
    ExactScalar(long n) : re_(n) {}
    ExactScalar(const Rational& q) : re_(q) {}
    ExactScalar(const Quad& re) : re_(re) {}
    ExactScalar(const Quad& re, const Quad& im) : re_(re), im_(im) {}

    static ExactScalar zero() { return ExactScalar(); }
    static ExactScalar one() { return ExactScalar(1); }
    static ExactScalar i() { return ExactScalar(Quad(0), Quad(1)); }
    static ExactScalar sqrt2() { return ExactScalar(Quad::sqrt2()); }
    // a + b*sqrt2 + (c + d*sqrt2)*i
    static ExactScalar make(const Rational& a, const Rational& b,
                            const Rational& c, const Rational& d) {
        return ExactScalar(Quad(a, b), Quad(c, d));
    }

    const Quad& re() const { return re_; }
    const Quad& im() const { return im_; }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }
    bool is_one() const { return im_.is_zero() && re_.s == 0 && re_.r == 1; }
    bool is_rational() const { return im_.is_zero() && re_.is_rational(); }

    ExactScalar operator-() const { return ExactScalar(-re_, -im_); }
    ExactScalar operator+(const ExactScalar& o) const {
        return ExactScalar(re_ + o.re_, im_ + o.im_);
    }
    ExactScalar operator-(const ExactScalar& o) const {
        return ExactScalar(re_ - o.re_, im_ - o.im_);
    }
    ExactScalar operator*(const ExactScalar& o) const {
        return ExactScalar(re_ * o.re_ - im_ * o.im_, re_ * o.im_ + im_ * o.re_);
    }
    ExactScalar operator/(const ExactScalar& o) const;
    ExactScalar& operator+=(const ExactScalar& o) { *this = *this + o; return *this; }
    ExactScalar& operator-=(const ExactScalar& o) { *this = *this - o; return *this; }
    ExactScalar& operator*=(const ExactScalar& o) { *this = *this * o; return *this; }
    bool operator==(const ExactScalar& o) const { return re_ == o.re_ && im_ == o.im_; }
    bool operator!=(const ExactScalar& o) const { return !(*this == o); }

    ExactScalar inverse() const;
    ExactScalar conj() const { return ExactScalar(re_, -im_); }

    // Exact sign; only defined for real elements.
    int sign() const;

    std::complex<double> to_complex() const;
    // Canonical text: a+b*sqrt2+(c+d*sqrt2)*i with reduced fractions,
    // zero components omitted.
    std::string str() const;

private:
    Quad re_;
    Quad im_;
};

ExactScalar operator*(const Rational& q, const ExactScalar& x);

}  // namespace crmodel
