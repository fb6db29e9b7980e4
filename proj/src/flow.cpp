#include "crmodel/flow.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace crmodel {

namespace {

// Flattened terms of one coefficient polynomial for fast repeated evaluation.
struct CompiledPoly {
    struct Term {
        std::complex<double> c;
        std::vector<std::pair<int, int>> powers;  // (complex coordinate j, exponent)
    };
    std::vector<Term> terms;

    std::complex<double> eval(const std::array<std::complex<double>, 3>& z) const {
        std::complex<double> acc = 0.0;
        for (const Term& t : terms) {
            std::complex<double> v = t.c;
            for (const auto& [j, e] : t.powers)
                for (int k = 0; k < e; ++k) v *= z[j];
            acc += v;
        }
        return acc;
    }
};

CompiledPoly compile(const Poly& f) {
    CompiledPoly out;
    const VarTablePtr& table = f.table();
    const auto& zidx = table->complex_vars();
    for (const auto& [e, c] : f.terms()) {
        CompiledPoly::Term t;
        t.c = c.to_complex();
        for (size_t v = 0; v < e.size(); ++v) {
            if (e[v] == 0) continue;
            int j = -1;
            for (size_t k = 0; k < zidx.size(); ++k)
                if (zidx[k] == static_cast<int>(v)) j = static_cast<int>(k);
            if (j < 0)
                throw std::invalid_argument(
                    "integrate_flow: field coefficients must only use the complex coordinates");
            t.powers.emplace_back(j, e[v]);
        }
        out.terms.push_back(std::move(t));
    }
    return out;
}

std::array<double, 6> rhs(const std::array<CompiledPoly, 3>& f, const std::array<double, 6>& s) {
    auto z = state_to_complex(s);
    std::array<double, 6> d{};
    for (int j = 0; j < 3; ++j) {
        std::complex<double> v = f[j].eval(z);
        d[2 * j] = v.real();
        d[2 * j + 1] = v.imag();
    }
    return d;
}

}  // namespace

std::array<std::complex<double>, 3> state_to_complex(const std::array<double, 6>& s) {
    return {std::complex<double>(s[0], s[1]), std::complex<double>(s[2], s[3]),
            std::complex<double>(s[4], s[5])};
}

Trajectory integrate_flow(const HoloVField& X, const std::array<double, 6>& start, double T,
                          double h, const std::string& field_name) {
    if (!(h > 0) || T < 0) throw std::invalid_argument("integrate_flow: need h > 0, T >= 0");
    std::array<CompiledPoly, 3> f = {compile(X.coeff(0)), compile(X.coeff(1)),
                                     compile(X.coeff(2))};
    Trajectory traj;
    traj.field_name = field_name;
    traj.start = start;
    traj.h = h;
    long steps = std::lround(T / h);
    std::array<double, 6> s = start;
    traj.samples.reserve(steps + 1);
    traj.samples.emplace_back(0.0, s);
    for (long n = 0; n < steps; ++n) {
        auto k1 = rhs(f, s);
        std::array<double, 6> tmp;
        for (int i = 0; i < 6; ++i) tmp[i] = s[i] + 0.5 * h * k1[i];
        auto k2 = rhs(f, tmp);
        for (int i = 0; i < 6; ++i) tmp[i] = s[i] + 0.5 * h * k2[i];
        auto k3 = rhs(f, tmp);
        for (int i = 0; i < 6; ++i) tmp[i] = s[i] + h * k3[i];
        auto k4 = rhs(f, tmp);
        for (int i = 0; i < 6; ++i)
            s[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
        for (double v : s)
            if (!std::isfinite(v))
                throw std::runtime_error("integrate_flow: nonfinite state at step " +
                                         std::to_string(n + 1));
        traj.samples.emplace_back((n + 1) * h, s);
    }
    return traj;
}

namespace {

double eval_real_poly(const Poly& f_cx, const Space& sp, const std::array<double, 6>& s) {
    auto values = sp.point_values_numeric(state_to_complex(s));
    return f_cx.eval_complex(values).real();
}

double rel_dev(double v, double v0) {
    double scale = std::max(std::abs(v0), 1e-30);
    return std::abs(v - v0) / scale;
}

}  // namespace

DriftReport invariant_drift(const Trajectory& traj, const Space& sp, const Poly& p_cx,
                            const Poly& q_cx) {
    DriftReport rep;
    if (traj.samples.empty()) return rep;
    double p0 = eval_real_poly(p_cx, sp, traj.samples.front().second);
    double q0 = eval_real_poly(q_cx, sp, traj.samples.front().second);
    double mu0 = 0.0;
    bool have_mu = p0 != 0.0;
    if (have_mu) mu0 = q0 * q0 / std::pow(std::abs(p0), 3);
    for (const auto& [t, s] : traj.samples) {
        (void)t;
        double p = eval_real_poly(p_cx, sp, s);
        double q = eval_real_poly(q_cx, sp, s);
        if (p == 0.0) rep.p_nonzero = false;
        rep.drift_p = std::max(rep.drift_p, rel_dev(p, p0));
        rep.drift_q = std::max(rep.drift_q, rel_dev(q, q0));
        if (have_mu && p != 0.0)
            rep.drift_mu2 = std::max(rep.drift_mu2, rel_dev(q * q / std::pow(std::abs(p), 3), mu0));
    }
    rep.p_nonzero = rep.p_nonzero && have_mu;
    return rep;
}

namespace {

OrbitClass classify_from_signs(int sp_, bool qz, std::optional<double> mu2, bool exact) {
    OrbitClass c;
    c.sign_p = sp_;
    c.q_zero = qz;
    c.mu2 = mu2;
    c.exact = exact;
    if (sp_ == 0) c.label = qz ? "cubic" : "complement";
    else c.label = sp_ > 0 ? "P>0" : "P<0";
    return c;
}

}  // namespace

OrbitClass classify_point_exact(const Space& sp, const Poly& p_cx, const Poly& q_cx,
                                const std::array<ExactScalar, 3>& point) {
    auto values = sp.point_values(point);
    ExactScalar p = p_cx.eval(values);
    ExactScalar q = q_cx.eval(values);
    int sgn_p = p.sign();
    bool qz = q.is_zero();
    std::optional<double> mu2;
    std::optional<ExactScalar> mu2_exact;
    if (sgn_p != 0) {
        ExactScalar abs_p = sgn_p > 0 ? p : -p;
        mu2_exact = (q * q) / (abs_p * abs_p * abs_p);
        mu2 = mu2_exact->to_complex().real();
    }
    OrbitClass c = classify_from_signs(sgn_p, qz, mu2, true);
    c.mu2_exact = mu2_exact;
    return c;
}

OrbitClass classify_point_numeric(const Space& sp, const Poly& p_cx, const Poly& q_cx,
                                  const std::array<double, 6>& point, double zero_tol) {
    double p = eval_real_poly(p_cx, sp, point);
    double q = eval_real_poly(q_cx, sp, point);
    int sgn_p = std::abs(p) <= zero_tol ? 0 : (p > 0 ? 1 : -1);
    bool qz = std::abs(q) <= zero_tol;
    std::optional<double> mu2;
    if (sgn_p != 0) mu2 = q * q / std::pow(std::abs(p), 3);
    return classify_from_signs(sgn_p, qz, mu2, false);
}

std::string trajectory_csv(const Trajectory& traj, const Space& sp, const Poly& p_cx,
                           const Poly& q_cx) {
    std::ostringstream os;
    os.precision(17);
    os << "t,x1,y1,x2,y2,x3,y3,P,Q,mu2\n";
    for (const auto& [t, s] : traj.samples) {
        double p = eval_real_poly(p_cx, sp, s);
        double q = eval_real_poly(q_cx, sp, s);
        os << t;
        for (double v : s) os << "," << v;
        os << "," << p << "," << q << ",";
        if (p != 0.0) os << q * q / std::pow(std::abs(p), 3);
        else os << "nan";
        os << "\n";
    }
    return os.str();
}

}  // namespace crmodel
