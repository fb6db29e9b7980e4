#include <doctest.h>

#include <random>

#include "crmodel/linalg.hpp"
#include "test_util.hpp"

using namespace crmodel;
using namespace crmodel::testutil;

namespace {

std::mt19937 rng(23);

Row random_row(int n) {
    std::uniform_int_distribution<long> coef(-5, 5);
    Row r(n);
    for (auto& c : r) c = q(coef(rng));
    return r;
}

}  // namespace

TEST_CASE("rank and nullspace of a simple system") {
    RowReducer red(3);
    red.add_row({q(1), q(2), q(3)});
    red.add_row({q(2), q(4), q(6)});
    red.add_row({q(0), q(1), q(1)});
    CHECK(red.rank() == 2);
    auto ns = red.nullspace();
    REQUIRE(ns.size() == 1);
    for (const Row& a : {Row{q(1), q(2), q(3)}, Row{q(0), q(1), q(1)}}) {
        ExactScalar dot;
        for (int j = 0; j < 3; ++j) dot += a[j] * ns[0][j];
        CHECK(dot.is_zero());
    }
}

TEST_CASE("nullspace vectors satisfy the accumulated rows") {
    for (int trial = 0; trial < 30; ++trial) {
        int n = 6;
        RowReducer red(n);
        std::vector<Row> rows;
        for (int k = 0; k < 4; ++k) {
            rows.push_back(random_row(n));
            red.add_row(rows.back());
        }
        auto ns = red.nullspace();
        CHECK(static_cast<int>(ns.size()) == n - red.rank());
        for (const Row& x : ns)
            for (const Row& a : rows) {
                ExactScalar dot;
                for (int j = 0; j < n; ++j) dot += a[j] * x[j];
                CHECK(dot.is_zero());
            }
    }
}

TEST_CASE("solve_linear finds exact solutions and detects inconsistency") {
    std::vector<Row> a = {{q(1), q(1)}, {q(1), q(-1)}};
    auto x = solve_linear(a, {q(3), q(1)});
    REQUIRE(x.has_value());
    CHECK((*x)[0] == q(2));
    CHECK((*x)[1] == q(1));
    std::vector<Row> bad = {{q(1), q(1)}, {q(2), q(2)}};
    CHECK_FALSE(solve_linear(bad, {q(0), q(1)}).has_value());
}

TEST_CASE("express_in_span with irrational coefficients") {
    ExactScalar s2 = ExactScalar::sqrt2();
    std::vector<Row> span = {{q(1), q(0)}, {q(0), q(1)}};
    auto c = express_in_span(span, {s2, q(3) * s2});
    REQUIRE(c.has_value());
    CHECK((*c)[0] == s2);
    CHECK((*c)[1] == q(3) * s2);
}

TEST_CASE("spans_equal") {
    std::vector<Row> a = {{q(1), q(0), q(1)}, {q(0), q(1), q(0)}};
    std::vector<Row> b = {{q(1), q(1), q(1)}, {q(2), q(-1), q(2)}};
    CHECK(spans_equal(a, b, 3));
    std::vector<Row> cset = {{q(1), q(0), q(0)}};
    CHECK_FALSE(spans_equal(a, cset, 3));
}

TEST_CASE("realify splits complex rows") {
    Row r = {ExactScalar::i(), q(2) + ExactScalar::i() * q(3)};
    auto [re, im] = realify(r);
    CHECK(re[0] == q(0));
    CHECK(im[0] == q(1));
    CHECK(re[1] == q(2));
    CHECK(im[1] == q(3));
}
