#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "crmodel/space.hpp"
#include "crmodel/vfield.hpp"

namespace crmodel {

// Fixed-step trajectory of the real flow of 2Re(X) in R^6 ~ C^3. State order:
// x1, y1, x2, y2, x3, y3.
struct Trajectory {
    std::string field_name;
    std::string integrator = "rk4";
    std::array<double, 6> start{};
    double h = 0.0;
    std::vector<std::pair<double, std::array<double, 6>>> samples;
};

// Classical 4th-order fixed-step integration; deterministic. Throws with the
// step index if the state leaves the finite range.
Trajectory integrate_flow(const HoloVField& X, const std::array<double, 6>& start, double T,
                          double h, const std::string& field_name = "");

struct DriftReport {
    bool p_nonzero = true;  // |P| stayed away from zero along the trajectory
    double drift_p = 0.0;
    double drift_q = 0.0;
    double drift_mu2 = 0.0;
};

// Max relative drift of P, Q and Q^2/|P|^3 along the trajectory.
DriftReport invariant_drift(const Trajectory& traj, const Space& sp, const Poly& p_cx,
                            const Poly& q_cx);

// Orbit class under the sign-of-P / Q^2 = mu^2 P^3 trichotomy.
struct OrbitClass {
    int sign_p = 0;
    bool q_zero = false;
    std::optional<double> mu2;              // defined when P != 0
    std::optional<ExactScalar> mu2_exact;   // set on the exact path
    bool exact = false;
    std::string label;  // "cubic", "complement", "P>0", "P<0"
};

OrbitClass classify_point_exact(const Space& sp, const Poly& p_cx, const Poly& q_cx,
                                const std::array<ExactScalar, 3>& point);
OrbitClass classify_point_numeric(const Space& sp, const Poly& p_cx, const Poly& q_cx,
                                  const std::array<double, 6>& point, double zero_tol = 1e-12);

// CSV emission, one row per sample: t,x1,y1,x2,y2,x3,y3,P,Q,mu2.
std::string trajectory_csv(const Trajectory& traj, const Space& sp, const Poly& p_cx,
                           const Poly& q_cx);

std::array<std::complex<double>, 3> state_to_complex(const std::array<double, 6>& s);

}  // namespace crmodel
