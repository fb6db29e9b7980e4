#include "crmodel/catalog.hpp"

#include <stdexcept>

namespace crmodel::catalog {

namespace {

ExactScalar c(long n, long d = 1) { return ExactScalar(ratio(n, d)); }
const ExactScalar I = ExactScalar::i();

Poly cpoly(const VarTablePtr& t, const ExactScalar& v) { return Poly::constant(t, v); }
Poly vpoly(const VarTablePtr& t, const std::string& n) { return Poly::var(t, n); }

// Bound parameter -> constant; formal -> table variable.
Poly pbind(const VarTablePtr& t, const std::string& name, const Params& params,
           std::optional<ExactScalar> dflt = std::nullopt) {
    auto it = params.find(name);
    if (it != params.end()) {
        if (it->second) return cpoly(t, *it->second);
        return vpoly(t, name);
    }
    if (dflt) return cpoly(t, *dflt);
    return vpoly(t, name);
}

bool bound_to(const Params& params, const std::string& name, const ExactScalar& v) {
    auto it = params.find(name);
    return it != params.end() && it->second && *it->second == v;
}

VarTablePtr chart_table(int n_real, const std::vector<std::string>& formal = {}) {
    std::vector<VarInfo> vars;
    for (int i = 1; i <= n_real; ++i)
        vars.push_back({"u" + std::to_string(i), VarKind::Real, 0, -1});
    for (const std::string& f : formal) vars.push_back({f, VarKind::Param, 0, -1});
    return VarTable::make(vars);
}

Chart make_chart(VarTablePtr params, std::vector<Poly> num, Poly base = Poly(),
                 std::vector<int> den_pow = {}) {
    Chart ch;
    ch.params = params;
    ch.num = std::move(num);
    ch.base = base.table() ? base : Poly::constant(params, ExactScalar::one());
    ch.den_pow = den_pow.empty() ? std::vector<int>(6, 0) : std::move(den_pow);
    return ch;
}

}  // namespace

const Space& ambient_space() {
    static const Space sp = make_space({{"z", 1}, {"w2", 2}, {"w3", 3}},
                                       {{"lambda", ""},
                                        {"p", "pb"},
                                        {"pb", "p"},
                                        {"q2", ""},
                                        {"q3", ""},
                                        {"mu2", ""}});
    return sp;
}

const Space& tube_space() {
    static const Space sp = make_space(
        {{"z1", 1}, {"z2", 2}, {"z3", 3}},
        {{"nu", ""}, {"beta", ""}, {"gamma", ""}, {"delta", ""}, {"s", ""}, {"n", ""},
         {"lambda", ""}, {"t", ""}, {"r", ""}, {"a1", ""}, {"a2", ""}, {"a3", ""}});
    return sp;
}

const Space& quadric_space() {
    static const Space sp = make_space({{"z1", 1}, {"z2", 1}, {"w3", 2}});
    return sp;
}

const std::vector<std::string>& algebra_labels() {
    static const std::vector<std::string> labels = {"X3", "X2", "X1", "X1'", "X0"};
    return labels;
}

const StructureTable& abstract_relations() {
    // Index order X3, X2, X1, X1', X0.
    static const StructureTable table = make_structure_table(
        algebra_labels(), {
                              {0, 4, 0, c(3)},  // [X3,X0] = 3X3
                              {1, 2, 0, c(2)},  // [X2,X1] = 2X3
                              {1, 4, 1, c(2)},  // [X2,X0] = 2X2
                              {2, 3, 1, c(4)},  // [X1,X1'] = 4X2
                              {2, 4, 2, c(1)},  // [X1,X0] = X1
                              {3, 4, 3, c(1)},  // [X1',X0] = X1'
                          });
    return table;
}

std::vector<ExactScalar> algebra_rescaling(const std::string& name) {
    // Diagonal map abstract -> concrete, order X3, X2, X1, X1', X0.
    if (name == "g") return {c(2), c(1), c(1), c(1), c(1)};
    if (name == "g_tilde") return {c(3, 2), c(1), c(1), c(-2), c(1)};
    if (name == "A") return {c(1), c(1), c(1), c(1), c(1)};
    if (name == "A1") return {c(1), c(1), c(1), c(-4), c(1)};
    if (name == "A0") return {c(1), c(1), c(1), c(4), c(1)};
    if (name == "B") return {c(-1, 2), c(1), c(1), c(-4), c(1)};
    throw std::invalid_argument("algebra_rescaling: unknown algebra '" + name + "'");
}

std::vector<HoloVField> make_algebra(const std::string& name, const Params& params) {
    if (name == "g") {
        auto t = ambient_space().cx;
        Poly z = vpoly(t, "z"), w2 = vpoly(t, "w2"), w3 = vpoly(t, "w3");
        Poly zero(t);
        HoloVField X3(t, {zero, zero, cpoly(t, c(1))});
        HoloVField X2(t, {zero, cpoly(t, c(1)), zero});
        HoloVField X1(t, {cpoly(t, c(1)), z * (c(2) * I), w2 * c(4) + z * z * (c(2) * I)});
        HoloVField X1p(t, {cpoly(t, I), z * c(2), z * z * c(2)});
        HoloVField X0(t, {z, w2 * c(2), w3 * c(3)});
        return {X3, X2, X1, X1p, X0};
    }
    auto t = tube_space().cx;
    Poly z1 = vpoly(t, "z1"), z2 = vpoly(t, "z2"), z3 = vpoly(t, "z3");
    Poly zero(t), one = cpoly(t, c(1));
    HoloVField D3(t, {zero, zero, one});
    HoloVField D2(t, {zero, one, zero});
    HoloVField D1(t, {one, zero, zero});
    HoloVField Euler(t, {z1, z2 * c(2), z3 * c(3)});
    if (name == "g_tilde") {
        HoloVField X1(t, {cpoly(t, I), z1 * c(2), z2 * c(3)});
        return {D3, D2, X1, D1, Euler};
    }
    if (name == "A") {
        Poly s = pbind(t, "s", params);
        Poly n = pbind(t, "n", params, c(0));
        HoloVField X1(t, {one, zero, z2 * c(2)});
        HoloVField X1p(t, {s, z1 * c(4), z1 * z1 * c(4) + n});
        return {D3, D2, X1, X1p, Euler};
    }
    if (name == "A1") {
        HoloVField X1(t, {one, z1, z2 * c(2)});
        return {D3, D2, X1, D1, Euler};
    }
    if (name == "A0") {
        HoloVField X1(t, {one, zero, z2 * c(2)});
        HoloVField X1p(t, {zero, z1, z1 * z1});
        return {D3, D2, X1, X1p, Euler};
    }
    if (name == "B") {
        HoloVField X2(t, {zero, zero, z2});
        HoloVField X1(t, {zero, one, z1 * z2});
        HoloVField X0(t, {z1, z2, z3 * c(3)});
        return {D3, X2, X1, D1, X0};
    }
    throw std::invalid_argument("make_algebra: unknown algebra '" + name + "'");
}

namespace {

// y3 - 3 y1 y2 + 2 y1^3 and y2 - y1^2 over the tube real table.
Poly tube_A(const VarTablePtr& re) {
    Poly y1 = vpoly(re, "y1"), y2 = vpoly(re, "y2"), y3 = vpoly(re, "y3");
    return y3 - y1 * y2 * c(3) + y1.pow(3) * c(2);
}

Poly tube_B(const VarTablePtr& re) {
    Poly y1 = vpoly(re, "y1"), y2 = vpoly(re, "y2");
    return y2 - y1 * y1;
}

}  // namespace

Hypersurface make_hypersurface(const std::string& name, const Params& params) {
    if (name == "C") {
        const Space& sp = ambient_space();
        auto re = sp.re;
        Poly x1 = vpoly(re, "x1"), y1 = vpoly(re, "y1"), y2 = vpoly(re, "y2"),
             y3 = vpoly(re, "y3");
        Poly rho1 = y2 - x1 * x1 - y1 * y1;
        Poly rho2 = y3 - x1.pow(3) * c(2) - x1 * y1 * y1 * c(2);
        auto ct = chart_table(4);
        Poly u1 = vpoly(ct, "u1"), u2 = vpoly(ct, "u2"), u3 = vpoly(ct, "u3"),
             u4 = vpoly(ct, "u4");
        Chart ch = make_chart(ct, {u1, u2, u3, u1 * u1 + u2 * u2, u4,
                                   u1.pow(3) * c(2) + u1 * u2 * u2 * c(2)});
        return make_hypersurface_from_real("C", sp, {rho1, rho2}, ch);
    }
    if (name == "hypersurface5") {
        const Space& sp = ambient_space();
        auto re = sp.re;
        Poly x1 = vpoly(re, "x1"), y1 = vpoly(re, "y1"), y2 = vpoly(re, "y2"),
             y3 = vpoly(re, "y3");
        Poly rho = y3 - x1 * y2 * c(4) + x1.pow(3) * c(2) + x1 * y1 * y1 * c(2);
        auto ct = chart_table(5);
        Poly u1 = vpoly(ct, "u1"), u2 = vpoly(ct, "u2"), u3 = vpoly(ct, "u3"),
             u4 = vpoly(ct, "u4"), u5 = vpoly(ct, "u5");
        Chart ch = make_chart(ct, {u1, u2, u3, u4, u5,
                                   u1 * u4 * c(4) - u1.pow(3) * c(2) - u1 * u2 * u2 * c(2)});
        return make_hypersurface_from_real("hypersurface5", sp, {rho}, ch);
    }
    if (name == "quadric_imw3") {
        const Space& sp = ambient_space();
        auto re = sp.re;
        Poly x1 = vpoly(re, "x1"), y1 = vpoly(re, "y1"), x2 = vpoly(re, "x2"),
             y2 = vpoly(re, "y2"), y3 = vpoly(re, "y3");
        Poly rho = y3 - x1 * x2 * c(2) - y1 * y2 * c(2);
        auto ct = chart_table(5);
        Poly u1 = vpoly(ct, "u1"), u2 = vpoly(ct, "u2"), u3 = vpoly(ct, "u3"),
             u4 = vpoly(ct, "u4"), u5 = vpoly(ct, "u5");
        Chart ch = make_chart(ct, {u1, u2, u3, u4, u5, u1 * u3 * c(2) + u2 * u4 * c(2)});
        return make_hypersurface_from_real("quadric_imw3", sp, {rho}, ch);
    }
    if (name == "M_minus" || name == "M_plus") {
        // Squared polynomial forms of the ambient orbit families:
        // Q^2 = mu2 (-P)^3 over P < 0 and Q^2 = mu2 P^3 over P > 0.
        const Space& sp = ambient_space();
        bool minus = name == "M_minus";
        Poly p = sp.to_real(invariant_P());
        Poly qq = sp.to_real(invariant_Q());
        Poly m = pbind(sp.re, "mu2", params);
        Poly rho = minus ? qq * qq + m * p.pow(3) : qq * qq - m * p.pow(3);
        return make_hypersurface_from_real(name, sp, {rho}, std::nullopt,
                                           {minus ? "Im w2 - |z|^2 < 0" : "Im w2 - |z|^2 > 0"});
    }

    const Space& sp = name == "quadric_indef_graded" ? quadric_space() : tube_space();
    auto re = sp.re;
    Poly x1 = vpoly(re, "x1"), y1 = vpoly(re, "y1"), x2 = vpoly(re, "x2"), y2 = vpoly(re, "y2"),
         x3 = vpoly(re, "x3"), y3 = vpoly(re, "y3");

    if (name == "C_tilde") {
        auto ct = chart_table(4);
        Poly u1 = vpoly(ct, "u1"), u2 = vpoly(ct, "u2"), u3 = vpoly(ct, "u3"),
             u4 = vpoly(ct, "u4");
        Chart ch = make_chart(ct, {u1, u4, u2, u4 * u4, u3, u4.pow(3)});
        return make_hypersurface_from_real("C_tilde", sp, {y2 - y1 * y1, y3 - y1.pow(3)}, ch);
    }
    if (name == "N_plus" || name == "N_minus") {
        bool minus = name == "N_minus";
        Poly nu = pbind(re, "nu", params);
        Poly a = tube_A(re), b = tube_B(re);
        Poly rho = minus ? a * a + nu * b.pow(3) : a * a - nu * b.pow(3);
        std::optional<Chart> ch;
        if (minus && bound_to(params, "nu", c(4))) {
            // Rational chart through the square root of nu = 4.
            auto ct = chart_table(5);
            Poly u1 = vpoly(ct, "u1"), u2 = vpoly(ct, "u2"), u3 = vpoly(ct, "u3"),
                 u4 = vpoly(ct, "u4"), u5 = vpoly(ct, "u5");
            ch = make_chart(ct, {u1, u4, u2, u4 * u4 - u5 * u5, u3,
                                 u4.pow(3) - u4 * u5 * u5 * c(3) + u5.pow(3) * c(2)});
        }
        return make_hypersurface_from_real(name, sp, {rho}, ch,
                                           {minus ? "y2 - y1^2 < 0" : "y2 - y1^2 > 0"});
    }
    if (name == "N0") {
        auto ct = chart_table(5);
        Poly u1 = vpoly(ct, "u1"), u2 = vpoly(ct, "u2"), u3 = vpoly(ct, "u3"),
             u4 = vpoly(ct, "u4"), u5 = vpoly(ct, "u5");
        Chart ch = make_chart(ct, {u1, u4, u2, u4 * u4, u3, u5});
        return make_hypersurface_from_real("N0", sp, {y2 - y1 * y1}, ch, {"y3 - y1^3 != 0"});
    }
    if (name == "S") {
        Poly gm = pbind(re, "gamma", params);
        Poly rho = y1 * y3 - gm * y1.pow(4) - y2 * y2;
        bool formal = !params.count("gamma") || !params.at("gamma");
        auto ct = chart_table(5, formal ? std::vector<std::string>{"gamma"}
                                        : std::vector<std::string>{});
        Poly u1 = vpoly(ct, "u1"), u2 = vpoly(ct, "u2"), u3 = vpoly(ct, "u3"),
             u4 = vpoly(ct, "u4"), u5 = vpoly(ct, "u5");
        Poly gmc = formal ? vpoly(ct, "gamma") : cpoly(ct, *params.at("gamma"));
        Chart ch = make_chart(ct, {u1, u4, u2, u5, u3, gmc * u4.pow(4) + u5 * u5}, u4,
                              {0, 0, 0, 0, 0, 1});
        return make_hypersurface_from_real("S", sp, {rho}, ch, {"y1 != 0"});
    }
    if (name == "Q") {
        Poly bt = pbind(re, "beta", params);
        Poly rho = y3 - bt * y1.pow(3) - y2 * x1 * c(2);
        bool formal = !params.count("beta") || !params.at("beta");
        auto ct = chart_table(5, formal ? std::vector<std::string>{"beta"}
                                        : std::vector<std::string>{});
        Poly u1 = vpoly(ct, "u1"), u2 = vpoly(ct, "u2"), u3 = vpoly(ct, "u3"),
             u4 = vpoly(ct, "u4"), u5 = vpoly(ct, "u5");
        Poly btc = formal ? vpoly(ct, "beta") : cpoly(ct, *params.at("beta"));
        Chart ch = make_chart(ct, {u1, u4, u2, u5, u3, btc * u4.pow(3) + u5 * u1 * c(2)});
        return make_hypersurface_from_real("Q", sp, {rho}, ch, {"y1 != 0"});
    }
    if (name == "Pi") {
        Poly dl = pbind(re, "delta", params);
        Poly rho = y2 - dl * y1;
        bool formal = !params.count("delta") || !params.at("delta");
        auto ct = chart_table(5, formal ? std::vector<std::string>{"delta"}
                                        : std::vector<std::string>{});
        Poly u1 = vpoly(ct, "u1"), u2 = vpoly(ct, "u2"), u3 = vpoly(ct, "u3"),
             u4 = vpoly(ct, "u4"), u5 = vpoly(ct, "u5");
        Poly dlc = formal ? vpoly(ct, "delta") : cpoly(ct, *params.at("delta"));
        Chart ch = make_chart(ct, {u1, u4, u2, dlc * u4, u3, u5});
        return make_hypersurface_from_real("Pi", sp, {rho}, ch, {"y1*y2 != 0"});
    }
    if (name == "quadric_indef" || name == "quadric_indef_graded") {
        Poly rho = y3 - x1 * x1 - y1 * y1 + x2 * x2 + y2 * y2;
        auto ct = chart_table(5);
        Poly u1 = vpoly(ct, "u1"), u2 = vpoly(ct, "u2"), u3 = vpoly(ct, "u3"),
             u4 = vpoly(ct, "u4"), u5 = vpoly(ct, "u5");
        Chart ch = make_chart(
            ct, {u1, u2, u3, u4, u5, u1 * u1 + u2 * u2 - u3 * u3 - u4 * u4});
        return make_hypersurface_from_real(name, sp, {rho}, ch);
    }
    if (name == "quadric_zw") {
        Poly rho = y3 - y1 * x2 + x1 * y2;
        auto ct = chart_table(5);
        Poly u1 = vpoly(ct, "u1"), u2 = vpoly(ct, "u2"), u3 = vpoly(ct, "u3"),
             u4 = vpoly(ct, "u4"), u5 = vpoly(ct, "u5");
        Chart ch = make_chart(ct, {u1, u2, u3, u4, u5, u2 * u3 - u1 * u4});
        return make_hypersurface_from_real("quadric_zw", sp, {rho}, ch);
    }
    if (name == "light_cone_tube") {
        Poly rho = y3 * y3 - y1 * y1 - y2 * y2;
        auto ct = chart_table(5);
        Poly u1 = vpoly(ct, "u1"), u2 = vpoly(ct, "u2"), u3 = vpoly(ct, "u3"),
             u4 = vpoly(ct, "u4"), u5 = vpoly(ct, "u5");
        Chart ch = make_chart(ct, {u1, u4 * u4 - u5 * u5, u2, u4 * u5 * c(2), u3,
                                   u4 * u4 + u5 * u5});
        return make_hypersurface_from_real("light_cone_tube", sp, {rho}, ch, {"y3 > 0"});
    }
    if (name == "sphere_cylinder") {
        Poly rho = x1 * x1 + y1 * y1 + x2 * x2 + y2 * y2 - cpoly(re, c(1));
        auto ct = chart_table(5);
        Poly u1 = vpoly(ct, "u1"), u2 = vpoly(ct, "u2"), u3 = vpoly(ct, "u3"),
             u4 = vpoly(ct, "u4"), u5 = vpoly(ct, "u5");
        Poly d = cpoly(ct, c(1)) + u1 * u1 + u2 * u2 + u3 * u3;
        Poly num_y2 = cpoly(ct, c(1)) - u1 * u1 - u2 * u2 - u3 * u3;
        Chart ch = make_chart(ct, {u1 * c(2), u2 * c(2), u3 * c(2), num_y2, u4, u5}, d,
                              {1, 1, 1, 1, 0, 0});
        return make_hypersurface_from_real("sphere_cylinder", sp, {rho}, ch);
    }
    if (name == "hyperplane") {
        auto ct = chart_table(5);
        Poly u1 = vpoly(ct, "u1"), u2 = vpoly(ct, "u2"), u3 = vpoly(ct, "u3"),
             u4 = vpoly(ct, "u4"), u5 = vpoly(ct, "u5");
        Chart ch = make_chart(ct, {u1, u2, u3, u4, u5, Poly(ct)});
        return make_hypersurface_from_real("hyperplane", sp, {y3}, ch);
    }
    throw std::invalid_argument("make_hypersurface: unknown surface '" + name + "'");
}

namespace {

PolyMap tube_self_map(std::array<Poly, 3> fwd, std::array<Poly, 3> inv) {
    auto t = tube_space().cx;
    return PolyMap(t, t, std::move(fwd), std::move(inv));
}

PolyMap tube_self_map(std::array<Poly, 3> fwd) {
    auto t = tube_space().cx;
    return PolyMap(t, t, std::move(fwd));
}

}  // namespace

PolyMap make_map(const std::string& name, const Params& params) {
    const Space& amb = ambient_space();
    const Space& tub = tube_space();
    if (name == "tube_to_ambient") {
        auto s = tub.cx, d = amb.cx;
        Poly z1 = vpoly(s, "z1"), z2 = vpoly(s, "z2"), z3 = vpoly(s, "z3");
        Poly z = vpoly(d, "z"), w2 = vpoly(d, "w2"), w3 = vpoly(d, "w3");
        ExactScalar alpha = ExactScalar::make(ratio(0), ratio(0), ratio(0), ratio(-1, 2));
        ExactScalar beta = ExactScalar::make(ratio(0), ratio(0), ratio(1, 2), ratio(0));
        ExactScalar delta = ExactScalar::make(ratio(0), ratio(2, 3), ratio(0), ratio(0));
        ExactScalar eps = ExactScalar::make(ratio(0), ratio(1, 6), ratio(0), ratio(0));
        std::array<Poly, 3> fwd = {z1 * alpha, z2 + z1 * z1 * beta, z3 * delta + z1.pow(3) * eps};
        ExactScalar ai = alpha.inverse();
        std::array<Poly, 3> inv = {z * ai, w2 - (z * ai) * (z * ai) * beta,
                                   (w3 - (z * ai).pow(3) * eps) * delta.inverse()};
        return PolyMap(s, d, std::move(fwd), std::move(inv));
    }
    if (name == "flip") {
        auto t = amb.cx;
        Poly z = vpoly(t, "z"), w2 = vpoly(t, "w2"), w3 = vpoly(t, "w3");
        std::array<Poly, 3> f = {-z, w2, -w3};
        return PolyMap(t, t, f, f);
    }
    if (name == "tube_flip") {
        PolyMap f6 = make_map("tube_to_ambient");
        PolyMap fl = make_map("flip");
        std::array<Poly, 3> inv6;
        for (int j = 0; j < 3; ++j) inv6[j] = f6.inverse(j);
        std::array<Poly, 3> fwd6;
        for (int j = 0; j < 3; ++j) fwd6[j] = f6.forward(j);
        PolyMap f6_back(amb.cx, tub.cx, inv6, fwd6);
        return PolyMap::compose(f6_back, PolyMap::compose(fl, f6));
    }
    if (name == "dilation") {
        auto t = amb.cx;
        Poly z = vpoly(t, "z"), w2 = vpoly(t, "w2"), w3 = vpoly(t, "w3");
        Poly lam = pbind(t, "lambda", params);
        std::array<Poly, 3> f = {lam * z, lam * lam * w2, lam.pow(3) * w3};
        auto it = params.find("lambda");
        if (it != params.end() && it->second) {
            ExactScalar li = it->second->inverse();
            std::array<Poly, 3> g = {z * li, w2 * (li * li), w3 * (li * li * li)};
            return PolyMap(t, t, std::move(f), std::move(g));
        }
        return PolyMap(t, t, std::move(f));
    }
    if (name == "translation") {
        auto t = amb.cx;
        Poly z = vpoly(t, "z"), w2 = vpoly(t, "w2"), w3 = vpoly(t, "w3");
        Poly p = pbind(t, "p", params);
        Poly pb = pbind(t, "pb", params);
        Poly q2 = pbind(t, "q2", params);
        Poly q3 = pbind(t, "q3", params);
        Poly re_p = (p + pb) * c(1, 2);
        Poly re_ppb = (p * p * pb + p * pb * pb) * c(1, 2);
        std::array<Poly, 3> f = {
            z + p,
            w2 + (c(2) * I) * pb * z + I * p * pb + q2,
            w3 + c(4) * re_p * w2 + (c(2) * I) * (c(2) * p * pb + pb * pb) * z +
                (c(2) * I) * pb * z * z + (c(2) * I) * re_ppb + q3};
        return PolyMap(t, t, std::move(f));
    }
    if (name == "action")
        return PolyMap::compose(make_map("dilation", params), make_map("translation", params));
    if (name == "tube_dilation" || name == "a1_dilation") {
        auto t = tub.cx;
        Poly z1 = vpoly(t, "z1"), z2 = vpoly(t, "z2"), z3 = vpoly(t, "z3");
        Poly lam = pbind(t, "lambda", params);
        std::array<Poly, 3> f = {lam * z1, lam * lam * z2, lam.pow(3) * z3};
        auto it = params.find("lambda");
        if (it != params.end() && it->second) {
            ExactScalar li = it->second->inverse();
            std::array<Poly, 3> g = {z1 * li, z2 * (li * li), z3 * (li * li * li)};
            return tube_self_map(std::move(f), std::move(g));
        }
        return tube_self_map(std::move(f));
    }
    if (name == "b_dilation") {
        auto t = tub.cx;
        Poly z1 = vpoly(t, "z1"), z2 = vpoly(t, "z2"), z3 = vpoly(t, "z3");
        Poly lam = pbind(t, "lambda", params);
        std::array<Poly, 3> f = {lam * z1, lam * z2, lam.pow(3) * z3};
        auto it = params.find("lambda");
        if (it != params.end() && it->second) {
            ExactScalar li = it->second->inverse();
            std::array<Poly, 3> g = {z1 * li, z2 * li, z3 * (li * li * li)};
            return tube_self_map(std::move(f), std::move(g));
        }
        return tube_self_map(std::move(f));
    }
    auto t = tub.cx;
    Poly z1 = vpoly(t, "z1"), z2 = vpoly(t, "z2"), z3 = vpoly(t, "z3");
    if (name == "tube_translation") {
        Poly a1 = pbind(t, "a1", params), a2 = pbind(t, "a2", params), a3 = pbind(t, "a3", params);
        return tube_self_map({z1 + a1, z2 + a2, z3 + a3}, {z1 - a1, z2 - a2, z3 - a3});
    }
    if (name == "gtilde_imag_translation") {
        Poly tt = pbind(t, "t", params);
        auto fam = [&](const Poly& w) {
            return std::array<Poly, 3>{z1 + I * w, z2 + c(2) * w * z1 + I * w * w,
                                       z3 + c(3) * w * z2 + c(3) * w * w * z1 + I * w.pow(3)};
        };
        return tube_self_map(fam(tt), fam(-tt));
    }
    if (name == "a1_shear") {
        Poly tt = pbind(t, "t", params);
        auto fam = [&](const Poly& w) {
            return std::array<Poly, 3>{
                z1 + w, z2 + w * z1 + w * w * c(1, 2),
                z3 + c(2) * w * z2 + w * w * z1 + w.pow(3) * c(1, 3)};
        };
        return tube_self_map(fam(tt), fam(-tt));
    }
    if (name == "a0_shear_t") {
        Poly tt = pbind(t, "t", params);
        auto fam = [&](const Poly& w) {
            return std::array<Poly, 3>{z1 + w, z2, z3 + c(2) * w * z2};
        };
        return tube_self_map(fam(tt), fam(-tt));
    }
    if (name == "a0_shear_r") {
        Poly rr = pbind(t, "r", params);
        auto fam = [&](const Poly& w) {
            return std::array<Poly, 3>{z1, z2 + w * z1, z3 + w * z1 * z1};
        };
        return tube_self_map(fam(rr), fam(-rr));
    }
    if (name == "b_shear_r") {
        Poly rr = pbind(t, "r", params);
        auto fam = [&](const Poly& w) { return std::array<Poly, 3>{z1, z2, z3 + w * z2}; };
        return tube_self_map(fam(rr), fam(-rr));
    }
    if (name == "b_shear_t") {
        Poly tt = pbind(t, "t", params);
        auto fam = [&](const Poly& w) {
            return std::array<Poly, 3>{z1, z2 + w,
                                       z3 + w * z1 * z2 + w * w * z1 * c(1, 2)};
        };
        return tube_self_map(fam(tt), fam(-tt));
    }
    if (name == "s_family_change") {
        auto its = params.find("s");
        auto itt = params.find("t");
        if (its == params.end() || !its->second || itt == params.end() || !itt->second)
            throw std::invalid_argument("s_family_change: needs rational s and t");
        ExactScalar q = *its->second / *itt->second;
        ExactScalar qi = q.inverse();
        return tube_self_map({z1, z2 * q, z3 * q}, {z1, z2 * qi, z3 * qi});
    }
    if (name == "h5_kill_pluriharmonic") {
        auto a = amb.cx;
        Poly z = vpoly(a, "z"), w2 = vpoly(a, "w2"), w3 = vpoly(a, "w3");
        return PolyMap(a, a, {z, w2, w3 - c(2) * z * w2}, {z, w2, w3 + c(2) * z * w2});
    }
    if (name == "h5_w2_change") {
        auto a = amb.cx;
        Poly z = vpoly(a, "z"), w2 = vpoly(a, "w2"), w3 = vpoly(a, "w3");
        return PolyMap(a, a, {z, -I * w2 - z * z, w3}, {z, I * w2 + I * z * z, w3});
    }
    if (name == "h5_to_quadric")
        return PolyMap::compose(make_map("h5_w2_change"), make_map("h5_kill_pluriharmonic"));
    if (name == "imw3_from_indefinite") {
        auto d = amb.cx;
        Poly z = vpoly(d, "z"), w2 = vpoly(d, "w2"), w3 = vpoly(d, "w3");
        std::array<Poly, 3> f = {z1 + z2, z1 - z2, z3 * c(2)};
        std::array<Poly, 3> g = {(z + w2) * c(1, 2), (z - w2) * c(1, 2), w3 * c(1, 2)};
        return PolyMap(t, d, std::move(f), std::move(g));
    }
    if (name == "qbeta_step1") {
        Poly bt = pbind(t, "beta", params);
        std::array<Poly, 3> f = {z1, z2 * c(4),
                                 z3 + bt * z1.pow(3) * c(1, 4) - z1 * z2};
        std::array<Poly, 3> g = {z1, z2 * c(1, 4),
                                 z3 - bt * z1.pow(3) * c(1, 4) + z1 * z2 * c(1, 4)};
        return tube_self_map(std::move(f), std::move(g));
    }
    if (name == "qbeta_step2") {
        Poly bt = pbind(t, "beta", params);
        std::array<Poly, 3> f = {z1, bt * z1 * z1 * c(-3, 4) - z2 * c(1, 4), z3};
        std::array<Poly, 3> g = {z1, bt * z1 * z1 * c(-3) - z2 * c(4), z3};
        return tube_self_map(std::move(f), std::move(g));
    }
    if (name == "qbeta_to_quadric_zw")
        return PolyMap::compose(make_map("qbeta_step2", params), make_map("qbeta_step1", params));
    if (name == "quadric_zw_to_indefinite") {
        std::array<Poly, 3> f = {(z1 + I * z2) * c(1, 2), (z1 - I * z2) * c(1, 2), z3};
        std::array<Poly, 3> g = {z1 + z2, -I * (z1 - z2), z3};
        return tube_self_map(std::move(f), std::move(g));
    }
    if (name == "qbeta_to_indefinite")
        return PolyMap::compose(make_map("quadric_zw_to_indefinite"),
                                make_map("qbeta_to_quadric_zw", params));
    if (name == "s0_to_cone")
        return tube_self_map({z3 + z1, z2, z3 - z1},
                             {(z1 - z3) * c(1, 2), z2, (z1 + z3) * c(1, 2)});
    throw std::invalid_argument("make_map: unknown map '" + name + "'");
}

std::vector<ExactScalar> map6_basis_scalars() {
    // delta, 1, 1/sqrt2, -1/sqrt2, 1 in the order X3, X2, X1, X1', X0.
    return {ExactScalar::make(ratio(0), ratio(2, 3), ratio(0), ratio(0)), c(1),
            ExactScalar::make(ratio(0), ratio(1, 2), ratio(0), ratio(0)),
            ExactScalar::make(ratio(0), ratio(-1, 2), ratio(0), ratio(0)), c(1)};
}

Poly invariant_P() {
    const Space& sp = ambient_space();
    Poly x1 = vpoly(sp.re, "x1"), y1 = vpoly(sp.re, "y1"), y2 = vpoly(sp.re, "y2");
    return sp.to_complex(y2 - x1 * x1 - y1 * y1);
}

Poly invariant_Q() {
    const Space& sp = ambient_space();
    Poly x1 = vpoly(sp.re, "x1"), y1 = vpoly(sp.re, "y1"), y2 = vpoly(sp.re, "y2"),
         y3 = vpoly(sp.re, "y3");
    return sp.to_complex(y3 - x1 * y2 * c(4) + x1.pow(3) * c(2) + x1 * y1 * y1 * c(2));
}

std::vector<CatalogEntry> manifest() {
    std::vector<CatalogEntry> out;
    auto add = [&](std::string name, std::string kind,
                   std::vector<std::pair<std::string, std::string>> pars, std::string note) {
        out.push_back({std::move(name), std::move(kind), std::move(pars), std::move(note)});
    };
    add("g", "algebra", {}, "automorphism algebra of the model cubic, ambient coordinates");
    add("g_tilde", "algebra", {}, "tube realization of the model algebra");
    add("A", "algebra", {{"s", "rational|formal"}, {"n", "rational|formal"}},
        "one-parameter family of transitive realizations");
    add("A1", "algebra", {}, "simplified realization with unipotent shear");
    add("A0", "algebra", {}, "degenerate-case realization");
    add("B", "algebra", {}, "realization with Levi-flat orbits");
    add("C", "hypersurface", {}, "model 4-dimensional cubic, codimension 2");
    add("C_tilde", "hypersurface", {}, "tube over the twisted cubic, codimension 2");
    add("N_plus", "hypersurface", {{"nu", "rational|formal"}},
        "sextic tube orbits over y2 - y1^2 > 0");
    add("N_minus", "hypersurface", {{"nu", "rational|formal"}},
        "sextic tube orbits over y2 - y1^2 < 0; quartic with a rational chart at nu = 4");
    add("N0", "hypersurface", {}, "parabolic cylinder orbit y2 = y1^2, y3 != y1^3");
    add("S", "hypersurface", {{"gamma", "rational|formal"}},
        "orbits y3 = gamma y1^3 + y2^2/y1 of the A1 action");
    add("Q", "hypersurface", {{"beta", "rational|formal"}},
        "orbits y3 = beta y1^3 + 2 y2 x1 of the A0 action");
    add("Pi", "hypersurface", {{"delta", "rational|formal"}},
        "Levi-flat orbits y2 = delta y1 of the B action");
    add("quadric_indef", "hypersurface", {}, "indefinite quadric y3 = |z1|^2 - |z2|^2");
    add("quadric_indef_graded", "hypersurface", {},
        "indefinite quadric with weights 1,1,2 for the graded solver");
    add("quadric_zw", "hypersurface", {}, "quadric y3 = Im(z1 conj(z2))");
    add("light_cone_tube", "hypersurface", {}, "tube over the future light cone");
    add("sphere_cylinder", "hypersurface", {}, "cylinder over the unit sphere in C^2");
    add("hyperplane", "hypersurface", {}, "real hyperplane y3 = 0");
    add("hypersurface5", "hypersurface", {}, "smooth orbit closure Q = 0 of the ambient action");
    add("quadric_imw3", "hypersurface", {}, "quadric Im w3 = 2 Re(z conj(w2))");
    add("tube_to_ambient", "map", {}, "affine equivalence of the tube and ambient realizations");
    add("flip", "map", {}, "linear involution z -> -z, w3 -> -w3 of the cubic");
    add("tube_flip", "map", {}, "the flip conjugated into tube coordinates");
    add("dilation", "group-family", {{"lambda", "rational|formal"}}, "weighted dilations");
    add("translation", "group-family",
        {{"p", "rational|formal"}, {"pb", "rational|formal"}, {"q2", "rational|formal"},
         {"q3", "rational|formal"}},
        "polynomial translations of the ambient action");
    add("action", "group-family",
        {{"lambda", "rational|formal"}, {"p", "rational|formal"}, {"pb", "rational|formal"},
         {"q2", "rational|formal"}, {"q3", "rational|formal"}},
        "generic group element: dilation after translation");
    add("tube_dilation", "group-family", {{"lambda", "rational|formal"}},
        "weighted dilations, tube coordinates");
    add("tube_translation", "group-family",
        {{"a1", "rational|formal"}, {"a2", "rational|formal"}, {"a3", "rational|formal"}},
        "real translations, tube coordinates");
    add("gtilde_imag_translation", "group-family", {{"t", "rational|formal"}},
        "imaginary-direction translations of the tube realization");
    add("a1_shear", "group-family", {{"t", "rational|formal"}}, "unipotent family of A1");
    add("a0_shear_t", "group-family", {{"t", "rational|formal"}}, "first unipotent family of A0");
    add("a0_shear_r", "group-family", {{"r", "rational|formal"}}, "second unipotent family of A0");
    add("b_dilation", "group-family", {{"lambda", "rational|formal"}},
        "dilations of the B action");
    add("b_shear_r", "group-family", {{"r", "rational|formal"}}, "shear family of B");
    add("b_shear_t", "group-family", {{"t", "rational|formal"}}, "quadratic family of B");
    add("s_family_change", "map", {{"s", "rational"}, {"t", "rational"}},
        "linear change identifying A(s) with A(t)");
    add("h5_kill_pluriharmonic", "map", {}, "removes pluriharmonic terms from the Q = 0 orbit");
    add("h5_w2_change", "map", {}, "quadratic change w2 -> -i w2 - z^2");
    add("h5_to_quadric", "map", {}, "composite equivalence of Q = 0 with the quadric");
    add("imw3_from_indefinite", "map", {}, "linear equivalence of the two quadric forms");
    add("qbeta_step1", "map", {{"beta", "rational|formal"}},
        "pluriharmonic normalization of the Q_beta orbits");
    add("qbeta_step2", "map", {{"beta", "rational|formal"}},
        "quadratic change z2 -> -(3 beta/4) z1^2 - z2/4");
    add("qbeta_to_quadric_zw", "map", {{"beta", "rational|formal"}},
        "composite equivalence of Q_beta with y3 = Im(z1 conj(z2))");
    add("quadric_zw_to_indefinite", "map", {}, "linear equivalence of the two tube quadrics");
    add("qbeta_to_indefinite", "map", {{"beta", "rational|formal"}},
        "composite equivalence of Q_beta with the indefinite quadric");
    add("s0_to_cone", "map", {}, "linear equivalence of S_0 with the light-cone tube");
    return out;
}

}  // namespace crmodel::catalog
