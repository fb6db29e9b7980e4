#include <doctest.h>

#include <algorithm>
#include <random>

#include "crmodel/catalog.hpp"
#include "crmodel/stabilizer.hpp"
#include "test_util.hpp"

using namespace crmodel;
using namespace crmodel::testutil;
namespace cat = crmodel::catalog;

TEST_CASE("weight ansatz enumeration") {
    auto t = cat::tube_space().cx;
    auto km3 = weight_ansatz(t, -3);
    REQUIRE(km3.size() == 1);
    CHECK(km3[0].str() == "d/dz3");
    auto km2 = weight_ansatz(t, -2);
    REQUIRE(km2.size() == 2);
    CHECK(km2[0].str() == "d/dz2");
    CHECK(km2[1].str() == "z1*d/dz3");
    CHECK(weight_ansatz(t, -4).empty());
    for (const auto& f : weight_ansatz(t, 1)) CHECK(f.weight_homogeneous());
}

TEST_CASE("graded stabilizer of S_1 reproduces the A1 realization") {
    Hypersurface s1 = cat::make_hypersurface("S", {{"gamma", q(1)}});
    auto comps = graded_stabilizer(s1, -3, 5);
    std::vector<int> dims;
    for (const auto& c : comps) dims.push_back(c.dim());
    CHECK(dims == std::vector<int>{1, 1, 2, 1, 0, 0, 0, 0, 0});
    std::vector<HoloVField> all;
    for (const auto& c : comps) {
        for (const auto& f : c.basis) {
            CHECK(f.weight_homogeneous());
            CHECK(tangency_divisibility(f, s1));
            all.push_back(f);
        }
    }
    CHECK(field_spans_equal(all, cat::make_algebra("A1")));
    CHECK(bracket_closure_check(comps));
}

TEST_CASE("graded stabilizer of the indefinite quadric has total dimension 15") {
    Hypersurface qd = cat::make_hypersurface("quadric_indef_graded");
    auto comps = graded_stabilizer(qd, -2, 2);
    std::vector<int> dims;
    int total = 0;
    for (const auto& c : comps) {
        dims.push_back(c.dim());
        total += c.dim();
    }
    CHECK(total == 15);
    CHECK(dims == std::vector<int>{1, 4, 5, 4, 1});
    CHECK(bracket_closure_check(comps));
}

TEST_CASE("hyperplane components match the combinatorial count") {
    Hypersurface hp = cat::make_hypersurface("hyperplane");
    auto comps = graded_stabilizer(hp, -3, 5);
    // Tangency degenerates to Im h = 0 on y3 = 0: the first two coefficient
    // slots are free complex polynomials of the right weight and the third is
    // a real multiple of a power of z3.
    auto t = cat::tube_space().cx;
    auto monomials_of_weight = [&](int w) {
        int count = 0;
        for (int e1 = 0; e1 <= w; ++e1)
            for (int e2 = 0; 2 * e2 <= w - e1; ++e2)
                if ((w - e1 - 2 * e2) % 3 == 0) ++count;
        return w < 0 ? 0 : count;
    };
    int total = 0;
    for (const auto& c : comps) {
        int expect = 2 * monomials_of_weight(c.k + 1) + 2 * monomials_of_weight(c.k + 2) +
                     ((c.k + 3) % 3 == 0 ? 1 : 0);
        INFO("k = ", c.k);
        CHECK(c.dim() == expect);
        total += c.dim();
    }
    CHECK(total > 5);
}

TEST_CASE("dimensions are independent of ansatz enumeration order") {
    // The solver output is a nullspace dimension; permuting the ansatz must
    // not change it. Re-run with the surface rebuilt to shuffle object
    // identity, and compare against a manual shuffled-slot elimination.
    Hypersurface s1 = cat::make_hypersurface("S", {{"gamma", q(1)}});
    auto first = graded_stabilizer(s1, -3, 0);
    Hypersurface s1b = cat::make_hypersurface("S", {{"gamma", q(1)}});
    auto second = graded_stabilizer(s1b, -3, 0);
    REQUIRE(first.size() == second.size());
    for (size_t i = 0; i < first.size(); ++i) CHECK(first[i].dim() == second[i].dim());

    // Manual check at k = -1 with shuffled slots.
    auto ansatz = weight_ansatz(s1.space.cx, -1);
    std::vector<HoloVField> slots;
    for (const auto& m : ansatz) {
        slots.push_back(m);
        slots.push_back(m * ExactScalar::i());
    }
    std::mt19937 rng(99);
    std::shuffle(slots.begin(), slots.end(), rng);
    std::vector<Poly> lies;
    for (const auto& s : slots) lies.push_back(lie_derivative_real(s, s1, 0));
    auto nums = chart_numerators_aligned(s1, lies);
    std::map<Expvec, int, GrlexLess> eq;
    for (const auto& n : nums)
        for (const auto& [e, c] : n.terms()) {
            (void)c;
            eq.emplace(e, 0);
        }
    int rows = 0;
    for (auto& [e, idx] : eq) idx = rows++;
    RowReducer red(static_cast<int>(slots.size()));
    std::vector<Row> eqs(rows, Row(slots.size(), ExactScalar::zero()));
    for (size_t s = 0; s < slots.size(); ++s)
        for (const auto& [e, c] : nums[s].terms()) eqs[eq.at(e)][s] = c;
    for (const Row& r : eqs) {
        auto [re, im] = realify(r);
        red.add_row(re);
        red.add_row(im);
    }
    CHECK(static_cast<int>(slots.size()) - red.rank() == 2);
}

TEST_CASE("bracket closure fails when a needed component is removed") {
    Hypersurface s1 = cat::make_hypersurface("S", {{"gamma", q(1)}});
    auto comps = graded_stabilizer(s1, -3, 0);
    CHECK(bracket_closure_check(comps));
    // Dropping the -2 component orphans [t_{-1}, t_{-1}].
    std::vector<GradedComponent> truncated;
    for (const auto& c : comps)
        if (c.k != -2) truncated.push_back(c);
    CHECK_FALSE(bracket_closure_check(truncated));
    // A single abelian component passes trivially.
    std::vector<GradedComponent> single = {comps[0]};
    CHECK(bracket_closure_check(single));
}

TEST_CASE("non-monomial chart base is rejected") {
    Hypersurface cyl = cat::make_hypersurface("sphere_cylinder");
    CHECK_THROWS_AS(graded_stabilizer(cyl, -2, 0), std::invalid_argument);
}
