#include <doctest.h>

#include "crmodel/catalog.hpp"
#include "crmodel/suites.hpp"
#include "test_util.hpp"

using namespace crmodel;
using namespace crmodel::testutil;
namespace cat = crmodel::catalog;

TEST_CASE("every algebra instance closes and matches the abstract relations") {
    for (auto& c : suites::checks_brackets()) {
        INFO(c.name, " ", c.witness);
        CHECK(c.pass);
    }
}

TEST_CASE("unknown names are rejected") {
    CHECK_THROWS_AS(cat::make_algebra("nope"), std::invalid_argument);
    CHECK_THROWS_AS(cat::make_hypersurface("nope"), std::invalid_argument);
    CHECK_THROWS_AS(cat::make_map("nope"), std::invalid_argument);
}

TEST_CASE("map (6) sends the tube basis onto scalar multiples of the ambient basis") {
    for (auto& c : suites::checks_map6()) {
        INFO(c.name, " ", c.witness);
        CHECK(c.pass);
    }
}

TEST_CASE("equivalence maps verify") {
    for (auto& c : suites::checks_equivalence_maps()) {
        INFO(c.name, " ", c.witness);
        CHECK(c.pass);
    }
}

TEST_CASE("group families preserve their orbit families") {
    for (auto& c : suites::checks_group_preservation()) {
        INFO(c.name, " ", c.witness);
        CHECK(c.pass);
    }
}

TEST_CASE("A family at s = 0 matches A0 after the linear collapse") {
    // A(0) and A(1) generate the same action up to the recorded change; A0 is
    // the catalog normal form of the s = 0 case.
    auto a0_raw = cat::make_algebra("A", {{"s", q(0)}});
    auto a0 = cat::make_algebra("A0");
    // X1' of A(0) is 4 z1 d/dz2 + 4 z1^2 d/dz3 = 4 * X1' of A0.
    CHECK(a0_raw[3] == a0[3] * q(4));
    CHECK(field_spans_equal(a0_raw, a0));
}

TEST_CASE("S_gamma normalizes to S_1 inside the field extension") {
    // (z1, z2, z3) -> (z1, z2/sqrt(2), z3/2) carries S_2 onto S_1.
    const Space& tub = cat::tube_space();
    auto t = tub.cx;
    Poly z1 = Poly::var(t, "z1"), z2 = Poly::var(t, "z2"), z3 = Poly::var(t, "z3");
    ExactScalar inv_sqrt2 = ExactScalar::make(ratio(0), ratio(1, 2), ratio(0), ratio(0));
    PolyMap f(t, t, {z1, z2 * inv_sqrt2, z3 * q(1, 2)},
              {z1, z2 * ExactScalar::sqrt2(), z3 * q(2)});
    CHECK(map_transforms(f, cat::make_hypersurface("S", {{"gamma", q(2)}}),
                         cat::make_hypersurface("S", {{"gamma", q(1)}})));
}

TEST_CASE("map (6) carries the twisted-cubic tube onto the cubic") {
    PolyMap f6 = cat::make_map("tube_to_ambient");
    Hypersurface ct = cat::make_hypersurface("C_tilde");
    Hypersurface c = cat::make_hypersurface("C");
    // Pull each ambient defining polynomial back and substitute the tube
    // chart: both vanish identically.
    for (const Poly& rho : c.rho_cx) CHECK(chart_numerator(ct, f6.pullback(rho)).is_zero());
}

TEST_CASE("manifest lists every constructible entry") {
    auto entries = cat::manifest();
    CHECK(entries.size() >= 40);
    for (const auto& e : entries) {
        INFO(e.name);
        CHECK(!e.note.empty());
        cat::Params params;
        for (const auto& [pname, role] : e.parameters) {
            (void)role;
            if (e.name == "s_family_change") params[pname] = q(pname == "s" ? 1 : 2);
            else params[pname] = std::nullopt;
        }
        if (e.kind == "algebra") CHECK(cat::make_algebra(e.name, params).size() == 5);
        else if (e.kind == "hypersurface") CHECK(!cat::make_hypersurface(e.name, params).rho_cx.empty());
        else CHECK_NOTHROW(cat::make_map(e.name, params));
    }
}

TEST_CASE("N_plus with rational nu keeps the squared form") {
    Hypersurface np = cat::make_hypersurface("N_plus", {{"nu", q(9)}});
    auto re = np.space.re;
    Poly y1 = Poly::var(re, "y1"), y2 = Poly::var(re, "y2"), y3 = Poly::var(re, "y3");
    Poly a = y3 - q(3) * y1 * y2 + q(2) * y1.pow(3);
    Poly b = y2 - y1 * y1;
    CHECK(np.rho_real[0] == a * a - q(9) * b.pow(3));
    CHECK(np.side == std::vector<std::string>{"y2 - y1^2 > 0"});
}
