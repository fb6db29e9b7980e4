#include <doctest.h>

#include "crmodel/catalog.hpp"
#include "crmodel/degeneracy.hpp"
#include "test_util.hpp"

using namespace crmodel;
using namespace crmodel::testutil;
namespace cat = crmodel::catalog;

namespace {

// Independent certificate: sum_j f_j rho_{z_j} vanishes at sampled numeric
// chart points of the surface.
bool certificate_ok(const Hypersurface& m, const HoloVField& f) {
    Poly cond(m.space.cx);
    for (int j = 0; j < 3; ++j) cond += f.coeff(j) * m.rho_cx[0].diff(m.space.z[j]);
    Poly num = chart_numerator(m, cond);
    return num.is_zero();
}

}  // namespace

TEST_CASE("Pi is holomorphically degenerate at bound 1") {
    Hypersurface pi = cat::make_hypersurface("Pi", {{"delta", q(2)}});
    auto basis = holomorphic_degeneracy_search(pi, 1);
    CHECK(!basis.empty());
    for (const auto& f : basis) {
        CHECK_FALSE(f.is_zero());
        CHECK(certificate_ok(pi, f));
    }
    // The d/dz3 direction lies in the complex tangent everywhere.
    HoloVField d3(pi.space.cx,
                  {Poly(pi.space.cx), Poly(pi.space.cx), Poly::constant(pi.space.cx, q(1))});
    CHECK(field_in_real_span(d3, basis).has_value());
}

TEST_CASE("sphere cylinder is degenerate at bound 1") {
    Hypersurface cyl = cat::make_hypersurface("sphere_cylinder");
    auto basis = holomorphic_degeneracy_search(cyl, 1);
    CHECK(!basis.empty());
    for (const auto& f : basis) CHECK(certificate_ok(cyl, f));
}

TEST_CASE("the indefinite quadric is holomorphically non-degenerate at bound 2") {
    auto basis = holomorphic_degeneracy_search(cat::make_hypersurface("quadric_indef"), 2);
    CHECK(basis.empty());
}

TEST_CASE("the quartic orbit is non-degenerate at bound 3") {
    auto basis =
        holomorphic_degeneracy_search(cat::make_hypersurface("N_minus", {{"nu", q(4)}}), 3);
    CHECK(basis.empty());
}

TEST_CASE("missing chart is an error") {
    Hypersurface nm = cat::make_hypersurface("N_minus", {{"nu", q(1)}});
    CHECK_THROWS_AS(holomorphic_degeneracy_search(nm, 1), std::invalid_argument);
}
