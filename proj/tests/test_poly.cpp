#include <doctest.h>

#include <random>

#include "crmodel/catalog.hpp"
#include "test_util.hpp"

using namespace crmodel;
using namespace crmodel::testutil;

namespace {

std::mt19937 rng(11);

Poly random_poly(const VarTablePtr& t, int max_terms = 4, int max_deg = 2, int nvars = 3) {
    std::uniform_int_distribution<int> nt(0, max_terms);
    std::uniform_int_distribution<int> deg(0, max_deg);
    std::uniform_int_distribution<long> coef(-6, 6);
    Poly f(t);
    int terms = nt(rng);
    for (int k = 0; k < terms; ++k) {
        Expvec e(t->size(), 0);
        for (int v = 0; v < nvars; ++v) e[v] = deg(rng);
        f.add_term(e, q(coef(rng)));
    }
    return f;
}

}  // namespace

TEST_CASE("binomial square") {
    auto t = ytable();
    Poly f = v(t, "y2") - v(t, "y1") * v(t, "y1");
    Poly expect = v(t, "y2") * v(t, "y2") - q(2) * v(t, "y1").pow(2) * v(t, "y2") +
                  v(t, "y1").pow(4);
    CHECK(f * f == expect);
}

TEST_CASE("degree-4 identity behind the quartic orbit") {
    auto t = ytable();
    Poly y1 = v(t, "y1"), y2 = v(t, "y2"), y3 = v(t, "y3");
    Poly a = y3 - q(3) * y1 * y2 + q(2) * y1.pow(3);
    Poly b = y2 - y1 * y1;
    Poly lhs = a * a + q(4) * b.pow(3);
    Poly rhs = y3 * y3 - q(3) * y1.pow(2) * y2.pow(2) - q(6) * y1 * y2 * y3 +
               q(4) * y1.pow(3) * y3 + q(4) * y2.pow(3);
    CHECK(lhs == rhs);
    // The y2^3 coefficient is +4: the point (0, -1, 2) satisfies
    // A^2 = -4 B^3 with B < 0 but fails the -4 variant.
    std::vector<std::optional<ExactScalar>> pt(t->size(), q(0));
    pt[t->index_of("y1")] = q(0);
    pt[t->index_of("y2")] = q(-1);
    pt[t->index_of("y3")] = q(2);
    CHECK(lhs.eval(pt).is_zero());
    Poly wrong = rhs - q(8) * y2.pow(3);
    CHECK_FALSE(wrong.eval(pt).is_zero());
}

TEST_CASE("additive identity") {
    auto t = ytable();
    Poly f = random_poly(t);
    CHECK(f + Poly(t) == f);
}

TEST_CASE("table mismatch is an error") {
    auto t = ytable();
    auto other = VarTable::make({{"w", VarKind::Real, 0, -1}});
    CHECK_THROWS_AS(v(t, "y1") + Poly::var(other, "w"), std::invalid_argument);
}

TEST_CASE("formal derivative") {
    const Space& amb = catalog::ambient_space();
    auto t = amb.cx;
    Poly z = Poly::var(t, "z"), w2 = Poly::var(t, "w2");
    Poly f = q(4) * w2 + q(2) * ExactScalar::i() * z * z;
    CHECK(f.diff("w2") == Poly::constant(t, q(4)));
    CHECK(Poly::constant(t, q(5)).diff("z").is_zero());
    auto yt = ytable();
    Poly g = v(yt, "y1").pow(2) * v(yt, "y2");
    CHECK(g.diff("y1") == q(2) * v(yt, "y1") * v(yt, "y2"));
    CHECK_THROWS_AS(g.diff("nope"), std::invalid_argument);
}

TEST_CASE("substitution implements linear equivalence of the cone") {
    auto t = ytable();
    Poly f = v(t, "y1") * v(t, "y3") - v(t, "y2") * v(t, "y2");
    std::map<int, Poly> bind;
    bind[t->index_of("y1")] = v(t, "u3") + v(t, "u1");
    bind[t->index_of("y3")] = v(t, "u3") - v(t, "u1");
    bind[t->index_of("y2")] = v(t, "u2");
    Poly got = f.substitute(bind);
    Poly expect = v(t, "u3").pow(2) - v(t, "u1").pow(2) - v(t, "u2").pow(2);
    CHECK(got == expect);
}

TEST_CASE("identity substitution") {
    auto t = ytable();
    Poly f = random_poly(t);
    CHECK(f.substitute({}) == f);
}

TEST_CASE("substitution respects composition on random instances") {
    auto t = ytable();
    for (int k = 0; k < 40; ++k) {
        Poly f = random_poly(t, 3, 3);
        Poly g1 = random_poly(t, 2, 1), g2 = random_poly(t, 2, 1);
        Poly h1 = random_poly(t, 2, 1), h2 = random_poly(t, 2, 1);
        std::map<int, Poly> first = {{0, g1}, {1, g2}};
        std::map<int, Poly> second = {{0, h1}, {1, h2}};
        Poly two_step = f.substitute(first).substitute(second);
        std::map<int, Poly> composed = {{0, g1.substitute(second)}, {1, g2.substitute(second)}};
        CHECK(f.substitute(composed) == two_step);
    }
}

TEST_CASE("conjugation swaps paired variables") {
    const Space& amb = catalog::ambient_space();
    auto t = amb.cx;
    Poly z = Poly::var(t, "z");
    Poly w2b = Poly::var(t, t->conj_index(t->index_of("w2")));
    Poly f = z * w2b;
    Poly g = f.conjugate();
    Poly zb = Poly::var(t, t->conj_index(t->index_of("z")));
    CHECK(g == zb * Poly::var(t, "w2"));
    CHECK((ExactScalar::i() * z).conjugate() == -ExactScalar::i() * zb);
    Poly p = catalog::invariant_P();
    CHECK(p.conjugate() == p);
    for (int k = 0; k < 50; ++k) {
        Poly f2 = random_poly(t, 4, 2, 6);
        CHECK(f2.conjugate().conjugate() == f2);
    }
}

TEST_CASE("exact division") {
    auto t = ytable();
    Poly y1 = v(t, "y1"), y2 = v(t, "y2");
    Poly f = y2 * y2 - y1.pow(4);
    Poly g = y2 - y1 * y1;
    auto quot = f.divide_exact(g);
    REQUIRE(quot.has_value());
    CHECK(*quot == y2 + y1 * y1);
    Poly one = Poly::constant(t, q(1));
    Poly r = random_poly(t);
    CHECK(r.divide_exact(one) == r);
    CHECK_FALSE((y2 + y1).divide_exact(g).has_value());
    CHECK_THROWS_AS(y2.divide_exact(Poly(t)), std::invalid_argument);
}

TEST_CASE("divide_exact(f*g, g) == f on random pairs") {
    auto t = ytable();
    int done = 0;
    while (done < 60) {
        Poly f = random_poly(t, 3, 2), g = random_poly(t, 3, 2);
        if (g.is_zero()) continue;
        ++done;
        auto quot = (f * g).divide_exact(g);
        REQUIRE(quot.has_value());
        CHECK(*quot == f);
    }
}

TEST_CASE("weight intervals") {
    auto t = ytable();
    Poly y1 = v(t, "y1"), y2 = v(t, "y2");
    CHECK(Poly(t).weight_interval() == std::nullopt);
    auto iv = (y2 + y1).weight_interval();
    REQUIRE(iv.has_value());
    CHECK(iv->first == 1);
    CHECK(iv->second == 2);
    CHECK_FALSE((y2 + y1).weight_homogeneous());

    const Space& amb = catalog::ambient_space();
    Poly z = Poly::var(amb.cx, "z");
    Poly zb = Poly::var(amb.cx, amb.cx->conj_index(amb.cx->index_of("z")));
    auto iv2 = (z * z * zb).weight_interval();
    REQUIRE(iv2.has_value());
    CHECK(iv2->first == 3);
    CHECK(iv2->second == 3);
    // Q is weight-homogeneous of weight 3.
    auto iv3 = catalog::invariant_Q().weight_interval();
    REQUIRE(iv3.has_value());
    CHECK(iv3->first == 3);
    CHECK(iv3->second == 3);
    // P of weight 2.
    auto iv4 = catalog::invariant_P().weight_interval();
    CHECK(iv4->first == 2);
    CHECK(iv4->second == 2);
}

TEST_CASE("ring axioms on random instances") {
    auto t = ytable();
    for (int k = 0; k < 40; ++k) {
        Poly f = random_poly(t), g = random_poly(t), h = random_poly(t);
        CHECK(f * g == g * f);
        CHECK((f * g) * h == f * (g * h));
        CHECK(f * (g + h) == f * g + f * h);
    }
}

TEST_CASE("canonical printing is graded-lex descending") {
    auto t = ytable();
    Poly y1 = v(t, "y1"), y2 = v(t, "y2"), y3 = v(t, "y3");
    CHECK((y2 - y1 * y1).str() == "-y1^2 + y2");
    CHECK((y3 * y3 - q(3) * y1 * y2 * y3).str() == "-3*y1*y2*y3 + y3^2");
    CHECK(Poly(t).str() == "0");
    CHECK((q(1, 2) * ExactScalar::sqrt2() * y1).str() == "1/2*sqrt2*y1");
    CHECK(((q(1) + ExactScalar::i()) * y1).str() == "(1 + i)*y1");
    const Space& amb = catalog::ambient_space();
    Poly z = Poly::var(amb.cx, "z");
    Poly zb = Poly::var(amb.cx, amb.cx->conj_index(amb.cx->index_of("z")));
    CHECK((z * zb).str() == "z*conj(z)");
    CHECK(catalog::invariant_P().str() == "-z*conj(z) - 1/2*i*w2 + 1/2*i*conj(w2)");
}

TEST_CASE("exact evaluation") {
    auto t = ytable();
    Poly f = v(t, "y1").pow(2) + q(2) * v(t, "y2");
    std::vector<std::optional<ExactScalar>> vals(t->size());
    vals[t->index_of("y1")] = q(3);
    vals[t->index_of("y2")] = q(1, 2);
    CHECK(f.eval(vals) == q(10));
    std::vector<std::optional<ExactScalar>> missing(t->size());
    CHECK_THROWS_AS(f.eval(missing), std::invalid_argument);
}
