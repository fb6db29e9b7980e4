#include <doctest.h>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <random>

#include "crmodel/scalar.hpp"

using namespace crmodel;

namespace {

ExactScalar q(long n, long d = 1) { return ExactScalar(ratio(n, d)); }

std::mt19937 rng(7);

Rational random_rational() {
    std::uniform_int_distribution<long> num(-20, 20);
    std::uniform_int_distribution<long> den(1, 12);
    return ratio(num(rng), den(rng));
}

ExactScalar random_scalar() {
    return ExactScalar::make(random_rational(), random_rational(), random_rational(),
                             random_rational());
}

}  // namespace

TEST_CASE("defining relation of the extension") {
    CHECK(ExactScalar::sqrt2() * ExactScalar::sqrt2() == q(2));
}

TEST_CASE("minus i over sqrt2 times i sqrt2 is one") {
    ExactScalar a = -ExactScalar::i() / ExactScalar::sqrt2();
    ExactScalar b = ExactScalar::i() * ExactScalar::sqrt2();
    CHECK(a * b == ExactScalar::one());
}

TEST_CASE("identity division") {
    ExactScalar x = q(1) + ExactScalar::i();
    CHECK(x / x == ExactScalar::one());
}

TEST_CASE("division by zero throws") {
    CHECK_THROWS_AS(q(1) / q(0), std::invalid_argument);
    CHECK_THROWS_AS(ExactScalar::zero().inverse(), std::invalid_argument);
}

TEST_CASE("field axioms on random triples") {
    for (int k = 0; k < 200; ++k) {
        ExactScalar a = random_scalar(), b = random_scalar(), c = random_scalar();
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        if (!a.is_zero()) CHECK(a * a.inverse() == ExactScalar::one());
    }
}

TEST_CASE("conjugation is an involution and a field morphism") {
    for (int k = 0; k < 100; ++k) {
        ExactScalar a = random_scalar(), b = random_scalar();
        CHECK(a.conj().conj() == a);
        CHECK((a * b).conj() == a.conj() * b.conj());
        CHECK((a + b).conj() == a.conj() + b.conj());
    }
}

TEST_CASE("exact sign agrees with 50-digit floating evaluation") {
    using big = boost::multiprecision::cpp_bin_float_50;
    const big root2 = sqrt(big(2));
    auto to_big = [](const Rational& r) {
        return big(r.get_num().get_str()) / big(r.get_den().get_str());
    };
    for (int k = 0; k < 1000; ++k) {
        Rational r = random_rational(), s = random_rational();
        Quad x(r, s);
        big approx = to_big(r) + to_big(s) * root2;
        int expected = approx == 0 ? 0 : (approx > 0 ? 1 : -1);
        CHECK(x.sign() == expected);
    }
}

TEST_CASE("sign works on pure-radical and mixed elements") {
    CHECK(Quad(ratio(-3), ratio(2)).sign() < 0);   // 2*sqrt2 = 2.828 < 3
    CHECK(Quad(ratio(-2), ratio(2)).sign() > 0);   // 2*sqrt2 > 2
    CHECK(Quad(ratio(3), ratio(-2)).sign() > 0);
    CHECK(Quad(ratio(0), ratio(-1)).sign() < 0);
    CHECK(Quad(ratio(0), ratio(0)).sign() == 0);
    CHECK_THROWS(ExactScalar::i().sign());
}

TEST_CASE("canonical text form") {
    CHECK(q(0).str() == "0");
    CHECK(q(-3, 4).str() == "-3/4");
    CHECK(ExactScalar::sqrt2().str() == "sqrt2");
    CHECK((q(1) + q(2) * ExactScalar::sqrt2()).str() == "1 + 2*sqrt2");
    CHECK((q(1, 2) - ExactScalar::sqrt2()).str() == "1/2 - sqrt2");
    CHECK(ExactScalar::i().str() == "i");
    CHECK((-ExactScalar::i()).str() == "-i");
    CHECK(ExactScalar::make(ratio(0), ratio(0), ratio(0), ratio(-1, 2)).str() == "-1/2*sqrt2*i");
    CHECK(ExactScalar::make(ratio(1), ratio(0), ratio(2), ratio(3)).str() == "1 + (2+3*sqrt2)*i");
    CHECK(ExactScalar::make(ratio(0), ratio(-1), ratio(-1), ratio(1)).str() ==
          "-sqrt2 + (-1+sqrt2)*i");
}

TEST_CASE("numeric image") {
    ExactScalar a = ExactScalar::make(ratio(1, 2), ratio(1), ratio(-1), ratio(0));
    auto z = a.to_complex();
    CHECK(z.real() == doctest::Approx(0.5 + std::sqrt(2.0)));
    CHECK(z.imag() == doctest::Approx(-1.0));
}
