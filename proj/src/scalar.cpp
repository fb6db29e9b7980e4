#include "crmodel/scalar.hpp"

#include <cmath>
#include <stdexcept>

namespace crmodel {

Rational ratio(long num, long den) {
    if (den == 0) throw std::invalid_argument("ratio: zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational parse_rational(const std::string& text) {
    Rational q;
    if (q.set_str(text, 10) != 0)
        throw std::invalid_argument("parse_rational: bad rational '" + text + "'");
    if (q.get_den() == 0)
        throw std::invalid_argument("parse_rational: zero denominator in '" + text + "'");
    q.canonicalize();
    return q;
}

std::string rational_str(const Rational& q) { return q.get_str(); }

double to_double(const Rational& q) { return q.get_d(); }

Quad Quad::operator*(const Quad& o) const {
    // (r + s*sqrt2)(r' + s'*sqrt2); sqrt2*sqrt2 folds into the rational part.
    return Quad(r * o.r + 2 * s * o.s, r * o.s + s * o.r);
}

Quad Quad::inverse() const {
    // 1/(r + s*sqrt2) = (r - s*sqrt2)/(r^2 - 2 s^2); the norm vanishes only at 0.
    if (is_zero()) throw std::invalid_argument("Quad: division by zero");
    Rational norm = r * r - 2 * s * s;
    return Quad(r / norm, -s / norm);
}

Quad Quad::operator/(const Quad& o) const { return *this * o.inverse(); }

int Quad::sign() const {
    int sr = sgn(r);
    int ss = sgn(s);
    if (ss == 0) return sr;
    if (sr == 0) return ss;
    if (sr == ss) return sr;
    // Opposite signs: compare r^2 against 2 s^2.
    Rational lhs = r * r;
    Rational rhs = 2 * s * s;
    int c = cmp(lhs, rhs);
    if (c == 0) throw std::logic_error("Quad::sign: r^2 == 2 s^2 is impossible for rationals");
    return c > 0 ? sr : ss;
}

double Quad::to_double() const {
    return r.get_d() + s.get_d() * std::sqrt(2.0);
}

std::string Quad::str() const {
    if (is_zero()) return "0";
    std::string out;
    if (r != 0) out = rational_str(r);
    if (s != 0) {
        std::string rad;
        if (s == 1) rad = "sqrt2";
        else if (s == -1) rad = "-sqrt2";
        else rad = rational_str(s) + "*sqrt2";
        if (out.empty()) out = rad;
        else if (rad[0] == '-') out += " - " + rad.substr(1);
        else out += " + " + rad;
    }
    return out;
}

ExactScalar ExactScalar::inverse() const {
    if (is_zero()) throw std::invalid_argument("ExactScalar: division by zero");
    Quad norm = re_ * re_ + im_ * im_;
    Quad ninv = norm.inverse();
    return ExactScalar(re_ * ninv, -(im_ * ninv));
}

ExactScalar ExactScalar::operator/(const ExactScalar& o) const {
    return *this * o.inverse();
}

int ExactScalar::sign() const {
    if (!is_real()) throw std::invalid_argument("ExactScalar::sign: not a real element");
    return re_.sign();
}

std::complex<double> ExactScalar::to_complex() const {
    return {re_.to_double(), im_.to_double()};
}

namespace {

// Appends `part` to `out` with " + " / " - " joiners, folding a leading minus.
void join_part(std::string& out, const std::string& part) {
    if (out.empty()) {
        out = part;
    } else if (part[0] == '-') {
        out += " - " + part.substr(1);
    } else {
        out += " + " + part;
    }
}

std::string imag_unit_part(const Quad& im) {
    if (im.s == 0) {
        if (im.r == 1) return "i";
        if (im.r == -1) return "-i";
        return rational_str(im.r) + "*i";
    }
    if (im.r == 0) {
        if (im.s == 1) return "sqrt2*i";
        if (im.s == -1) return "-sqrt2*i";
        return rational_str(im.s) + "*sqrt2*i";
    }
    // Mixed imaginary component: (c + d*sqrt2)*i.
    std::string inner = rational_str(im.r);
    if (im.s == 1) inner += "+sqrt2";
    else if (im.s == -1) inner += "-sqrt2";
    else if (sgn(im.s) > 0) inner += "+" + rational_str(im.s) + "*sqrt2";
    else inner += "-" + rational_str(Rational(-im.s)) + "*sqrt2";
    return "(" + inner + ")*i";
}

}  // namespace

std::string ExactScalar::str() const {
    if (is_zero()) return "0";
    std::string out;
    if (re_.r != 0) join_part(out, rational_str(re_.r));
    if (re_.s != 0) {
        if (re_.s == 1) join_part(out, "sqrt2");
        else if (re_.s == -1) join_part(out, "-sqrt2");
        else join_part(out, rational_str(re_.s) + "*sqrt2");
    }
    if (!im_.is_zero()) join_part(out, imag_unit_part(im_));
    return out;
}

ExactScalar operator*(const Rational& q, const ExactScalar& x) {
    return ExactScalar(Quad(q)) * x;
}

}  // namespace crmodel
