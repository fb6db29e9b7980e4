#include <doctest.h>

#include <random>

#include "crmodel/catalog.hpp"
#include "test_util.hpp"

using namespace crmodel;
using namespace crmodel::testutil;
namespace cat = crmodel::catalog;

namespace {

std::mt19937 rng(31);

HoloVField random_field(const Space& sp) {
    std::uniform_int_distribution<long> coef(-3, 3);
    std::uniform_int_distribution<int> deg(0, 2);
    auto t = sp.cx;
    std::array<Poly, 3> c = {Poly(t), Poly(t), Poly(t)};
    for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 2; ++k) {
            Expvec e(t->size(), 0);
            for (int v = 0; v < 3; ++v) e[sp.z[v]] = deg(rng);
            c[j].add_term(e, ExactScalar(Quad(ratio(coef(rng)), ratio(coef(rng), 2))));
        }
    return HoloVField(t, std::move(c));
}

}  // namespace

TEST_CASE("holomorphy is enforced") {
    const Space& amb = cat::ambient_space();
    Poly zb = Poly::var(amb.cx, amb.cx->conj_index(amb.cx->index_of("z")));
    CHECK_THROWS_AS(HoloVField(amb.cx, {zb, Poly(amb.cx), Poly(amb.cx)}), std::invalid_argument);
}

TEST_CASE("bracket examples in the ambient realization") {
    auto g = cat::make_algebra("g");
    const auto& X3 = g[0];
    const auto& X2 = g[1];
    const auto& X1 = g[2];
    const auto& X0 = g[4];
    CHECK(X3.bracket(X0) == X3 * q(3));
    CHECK(X1.bracket(X1).is_zero());
    // Concrete normalization differs from the abstract relation by X3 -> 2X3.
    CHECK(X2.bracket(X1) == X3 * q(4));
}

TEST_CASE("bracket antisymmetry and Jacobi on random fields") {
    const Space& amb = cat::ambient_space();
    for (int k = 0; k < 15; ++k) {
        HoloVField x = random_field(amb), y = random_field(amb), z = random_field(amb);
        CHECK(x.bracket(y) == -(y.bracket(x)));
        HoloVField jac = x.bracket(y).bracket(z) + y.bracket(z).bracket(x) +
                         z.bracket(x).bracket(y);
        CHECK(jac.is_zero());
    }
}

TEST_CASE("graded decomposition of the ambient basis") {
    auto g = cat::make_algebra("g");
    auto parts = g[2].graded_decompose();  // X1
    REQUIRE(parts.size() == 1);
    CHECK(parts[0].first == -1);
    auto parts0 = g[4].graded_decompose();  // X0, Euler type
    REQUIRE(parts0.size() == 1);
    CHECK(parts0[0].first == 0);

    const Space& tub = cat::tube_space();
    Poly z1 = Poly::var(tub.cx, "z1");
    HoloVField mixed(tub.cx, {z1, Poly(tub.cx), Poly::constant(tub.cx, q(1))});
    auto dm = mixed.graded_decompose();
    REQUIRE(dm.size() == 2);
    CHECK(dm[0].first == -3);
    CHECK(dm[1].first == 0);
    HoloVField sum = dm[0].second + dm[1].second;
    CHECK(sum == mixed);
}

TEST_CASE("graded components bracket into the right weights") {
    auto g = cat::make_algebra("g");
    // g = g_{-3} + g_{-2} + g_{-1} + g_0 with [g_i, g_j] in g_{i+j}.
    for (const auto& x : g)
        for (const auto& y : g) {
            auto dx = x.graded_decompose();
            auto dy = y.graded_decompose();
            REQUIRE(dx.size() <= 1);
            REQUIRE(dy.size() <= 1);
            if (dx.empty() || dy.empty()) continue;
            HoloVField br = x.bracket(y);
            if (br.is_zero()) continue;
            auto db = br.graded_decompose();
            REQUIRE(db.size() == 1);
            CHECK(db[0].first == dx[0].first + dy[0].first);
            CHECK(db[0].first >= -3);
            CHECK(db[0].first <= 0);
        }
}

TEST_CASE("real span membership and independence") {
    auto g = cat::make_algebra("g");
    CHECK(fields_independent(g));
    // 2*X3 + X2 lies in the real span; i*X3 does not (real coefficients only).
    HoloVField combo = g[0] * q(2) + g[1];
    auto coeffs = field_in_real_span(combo, g);
    REQUIRE(coeffs.has_value());
    CHECK((*coeffs)[0] == q(2));
    CHECK((*coeffs)[1] == q(1));
    CHECK_FALSE(field_in_real_span(g[0] * ExactScalar::i(), g).has_value());
    // sqrt2 * X3 is a real multiple.
    CHECK(field_in_real_span(g[0] * ExactScalar::sqrt2(), g).has_value());
}

TEST_CASE("field text form") {
    auto g = cat::make_algebra("g");
    CHECK(g[0].str() == "d/dw3");
    CHECK(g[3].str() == "i*d/dz + 2*z*d/dw2 + 2*z^2*d/dw3");
    CHECK(g[2].str() == "d/dz + 2*i*z*d/dw2 + (2*i*z^2 + 4*w2)*d/dw3");
}
