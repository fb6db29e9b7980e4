#include <doctest.h>

#include <cmath>

#include "crmodel/catalog.hpp"
#include "crmodel/flow.hpp"
#include "test_util.hpp"

using namespace crmodel;
using namespace crmodel::testutil;
namespace cat = crmodel::catalog;

TEST_CASE("constant fields translate in a straight line") {
    auto g = cat::make_algebra("g");
    // X2 = d/dw2: real flow moves x2 at unit speed.
    std::array<double, 6> start = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6};
    Trajectory t = integrate_flow(g[1], start, 1.0, 1e-3, "X2");
    auto end = t.samples.back().second;
    CHECK(end[2] == doctest::Approx(1.3).epsilon(1e-12));
    for (int i : {0, 1, 3, 4, 5}) CHECK(end[i] == doctest::Approx(start[i]).epsilon(1e-12));
    CHECK(t.samples.size() == 1001);
    CHECK(t.samples.front().second == start);
}

TEST_CASE("the dilation flow scales with weights") {
    auto g = cat::make_algebra("g");
    std::array<double, 6> start = {1.0, 0.0, 1.0, 0.0, 1.0, 0.0};
    double T = std::log(2.0);
    Trajectory t = integrate_flow(g[4], start, T, T / 2048, "X0");
    auto end = t.samples.back().second;
    CHECK(end[0] == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(end[2] == doctest::Approx(4.0).epsilon(1e-9));
    CHECK(end[4] == doctest::Approx(8.0).epsilon(1e-9));
}

TEST_CASE("X1 flow conserves P exactly to integrator accuracy") {
    auto g = cat::make_algebra("g");
    const Space& amb = cat::ambient_space();
    std::array<double, 6> start = {0.2, -0.1, 0.4, 1.1, 0.0, 0.3};  // P = 1.1 - 0.05 > 0.1
    Trajectory t = integrate_flow(g[2], start, 1.0, 1e-3, "X1");
    DriftReport d = invariant_drift(t, amb, cat::invariant_P(), cat::invariant_Q());
    CHECK(d.p_nonzero);
    CHECK(d.drift_p < 1e-12);
    CHECK(d.drift_mu2 < 1e-9);
}

TEST_CASE("nonfinite states are reported with the step index") {
    // dz1/dt = z1^2 from z1 = 2 blows up before t = 1.
    const Space& tub = cat::tube_space();
    Poly z1 = Poly::var(tub.cx, "z1");
    HoloVField x(tub.cx, {z1 * z1, Poly(tub.cx), Poly(tub.cx)});
    std::array<double, 6> start = {2.0, 0.0, 0.0, 0.0, 0.0, 0.0};
    CHECK_THROWS_AS(integrate_flow(x, start, 1.0, 1e-3), std::runtime_error);
    CHECK_THROWS_AS(integrate_flow(x, start, 1.0, 0.0), std::invalid_argument);
}

TEST_CASE("classification of the reference points") {
    const Space& amb = cat::ambient_space();
    Poly p = cat::invariant_P(), qq = cat::invariant_Q();
    OrbitClass origin = classify_point_exact(amb, p, qq, {q(0), q(0), q(0)});
    CHECK(origin.label == "cubic");
    CHECK(origin.sign_p == 0);
    CHECK(origin.q_zero);
    OrbitClass ball = classify_point_exact(amb, p, qq, {q(0), ExactScalar::i(), q(0)});
    CHECK(ball.label == "P>0");
    REQUIRE(ball.mu2_exact.has_value());
    CHECK(ball.mu2_exact->is_zero());
    OrbitClass comp = classify_point_exact(amb, p, qq, {q(0), q(0), ExactScalar::i()});
    CHECK(comp.label == "complement");
    CHECK_FALSE(comp.q_zero);
    OrbitClass num = classify_point_numeric(amb, p, qq, {0, 0, 0, 0, 0, 1e-15});
    CHECK(num.label == "cubic");  // below the 1e-12 zero tolerance
}

TEST_CASE("classification is constant along a dilation flow") {
    auto g = cat::make_algebra("g");
    const Space& amb = cat::ambient_space();
    Poly p = cat::invariant_P(), qq = cat::invariant_Q();
    std::array<double, 6> start = {0.3, 0.2, 0.1, 0.9, -0.4, 0.5};
    Trajectory t = integrate_flow(g[4], start, 1.0, 1e-3, "X0");
    OrbitClass c0 = classify_point_numeric(amb, p, qq, t.samples.front().second);
    OrbitClass c1 = classify_point_numeric(amb, p, qq, t.samples.back().second);
    CHECK(c0.label == c1.label);
    REQUIRE(c0.mu2.has_value());
    REQUIRE(c1.mu2.has_value());
    CHECK(*c1.mu2 == doctest::Approx(*c0.mu2).epsilon(1e-9));
}

TEST_CASE("fourth-order convergence on the dilation flow") {
    auto g = cat::make_algebra("g");
    const Space& amb = cat::ambient_space();
    Poly p = cat::invariant_P(), qq = cat::invariant_Q();
    std::array<double, 6> start = {-0.7, 0.1, 0.5, -0.9, 0.3, 0.8};
    double h = 4e-3;
    DriftReport d1 =
        invariant_drift(integrate_flow(g[4], start, 1.0, h, "X0"), amb, p, qq);
    DriftReport d2 =
        invariant_drift(integrate_flow(g[4], start, 1.0, h / 2, "X0"), amb, p, qq);
    REQUIRE(d1.drift_mu2 > 1e-12);
    double ratio = d1.drift_mu2 / d2.drift_mu2;
    CHECK(ratio > 12.0);
    CHECK(ratio < 20.0);
}

TEST_CASE("CSV schema") {
    auto g = cat::make_algebra("g");
    const Space& amb = cat::ambient_space();
    Trajectory t = integrate_flow(g[1], {0, 0, 0, 1, 0, 0}, 0.01, 1e-2, "X2");
    std::string csv = trajectory_csv(t, amb, cat::invariant_P(), cat::invariant_Q());
    CHECK(csv.substr(0, csv.find('\n')) == "t,x1,y1,x2,y2,x3,y3,P,Q,mu2");
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 3);  // header + 2 samples
}
