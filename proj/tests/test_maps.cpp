#include <doctest.h>

#include "crmodel/catalog.hpp"
#include "test_util.hpp"

using namespace crmodel;
using namespace crmodel::testutil;
namespace cat = crmodel::catalog;

TEST_CASE("declared inverses are verified at construction") {
    const Space& tub = cat::tube_space();
    auto t = tub.cx;
    Poly z1 = Poly::var(t, "z1"), z2 = Poly::var(t, "z2"), z3 = Poly::var(t, "z3");
    CHECK_THROWS_AS(PolyMap(t, t, {z1, z2, z3}, {z1, z2, z3 + z1}), std::invalid_argument);
    PolyMap ok(t, t, {z1, z2 - z1 * z1 * q(1, 2), z3}, {z1, z2 + z1 * z1 * q(1, 2), z3});
    CHECK(ok.has_verified_inverse());
}

TEST_CASE("pushforward requires a verified inverse") {
    const Space& tub = cat::tube_space();
    auto t = tub.cx;
    Poly z1 = Poly::var(t, "z1"), z2 = Poly::var(t, "z2"), z3 = Poly::var(t, "z3");
    PolyMap no_inv(t, t, {z1, z2, z3});
    HoloVField d1(t, {Poly::constant(t, q(1)), Poly(t), Poly(t)});
    CHECK_THROWS_AS(no_inv.pushforward(d1), std::invalid_argument);
}

TEST_CASE("pushforward under a shear follows the chain rule") {
    // z2 -> z2 - z1^2/2, z3 -> z3 - z1^3/3 sends d/dz1 to
    // d/dz1 - z1 d/dz2 - z1^2 d/dz3.
    const Space& tub = cat::tube_space();
    auto t = tub.cx;
    Poly z1 = Poly::var(t, "z1"), z2 = Poly::var(t, "z2"), z3 = Poly::var(t, "z3");
    PolyMap f(t, t, {z1, z2 - z1 * z1 * q(1, 2), z3 - z1.pow(3) * q(1, 3)},
              {z1, z2 + z1 * z1 * q(1, 2), z3 + z1.pow(3) * q(1, 3)});
    HoloVField d1(t, {Poly::constant(t, q(1)), Poly(t), Poly(t)});
    HoloVField pushed = f.pushforward(d1);
    HoloVField expect(t, {Poly::constant(t, q(1)), -z1, -(z1 * z1)});
    CHECK(pushed == expect);
}

TEST_CASE("pushforward under the identity") {
    const Space& tub = cat::tube_space();
    auto t = tub.cx;
    Poly z1 = Poly::var(t, "z1"), z2 = Poly::var(t, "z2"), z3 = Poly::var(t, "z3");
    PolyMap ident(t, t, {z1, z2, z3}, {z1, z2, z3});
    auto gt = cat::make_algebra("g_tilde");
    for (const auto& x : gt) CHECK(ident.pushforward(x) == x);
}

TEST_CASE("pushforward is bracket-equivariant") {
    PolyMap f6 = cat::make_map("tube_to_ambient");
    auto gt = cat::make_algebra("g_tilde");
    for (size_t i = 0; i < gt.size(); ++i)
        for (size_t j = i + 1; j < gt.size(); ++j) {
            HoloVField lhs = f6.pushforward(gt[i].bracket(gt[j]));
            HoloVField rhs = f6.pushforward(gt[i]).bracket(f6.pushforward(gt[j]));
            CHECK(lhs == rhs);
        }
}

TEST_CASE("map composition") {
    PolyMap s1 = cat::make_map("qbeta_step1", {{"beta", q(2)}});
    PolyMap s2 = cat::make_map("qbeta_step2", {{"beta", q(2)}});
    PolyMap both = PolyMap::compose(s2, s1);
    auto p = both.apply_point({ExactScalar::i(), q(1), q(0)});
    auto p1 = s1.apply_point({ExactScalar::i(), q(1), q(0)});
    auto p2 = s2.apply_point(p1);
    for (int j = 0; j < 3; ++j) CHECK(p[j] == p2[j]);
}

TEST_CASE("the flip is an involution preserving the cubic") {
    PolyMap flip = cat::make_map("flip");
    PolyMap twice = PolyMap::compose(flip, flip);
    const Space& amb = cat::ambient_space();
    for (int j = 0; j < 3; ++j)
        CHECK(twice.forward(j) == Poly::var(amb.cx, amb.cx->complex_vars()[j]));
    Hypersurface c = cat::make_hypersurface("C");
    CHECK(map_transforms(flip, c, c));
}

TEST_CASE("tube flip negates the odd coordinates") {
    PolyMap tf = cat::make_map("tube_flip");
    const Space& tub = cat::tube_space();
    Poly z1 = Poly::var(tub.cx, "z1"), z2 = Poly::var(tub.cx, "z2"),
         z3 = Poly::var(tub.cx, "z3");
    CHECK(tf.forward(0) == -z1);
    CHECK(tf.forward(1) == z2);
    CHECK(tf.forward(2) == -z3);
    // It interchanges the two components of each orbit: A -> -A.
    auto re = tub.re;
    Poly y1 = Poly::var(re, "y1"), y2 = Poly::var(re, "y2"), y3 = Poly::var(re, "y3");
    Poly a = tub.to_complex(y3 - y1 * y2 * q(3) + y1.pow(3) * q(2));
    CHECK(tf.pullback(a) == -a);
}

TEST_CASE("point transport through a concrete group element") {
    PolyMap shear = cat::make_map("a1_shear", {{"t", q(1, 2)}});
    auto p = shear.apply_point({q(0), q(0), q(0)});
    CHECK(p[0] == q(1, 2));
    CHECK(p[1] == q(1, 8));
    CHECK(p[2] == q(1, 24));
}
