#include "crmodel/space.hpp"

#include <stdexcept>

namespace crmodel {

Space make_space(const std::vector<std::pair<std::string, int>>& coords,
                 const std::vector<ParamDecl>& params) {
    if (coords.size() != 3) throw std::invalid_argument("make_space: need 3 coordinates");
    Space sp;
    std::vector<VarInfo> cx_vars, re_vars;
    for (int j = 0; j < 3; ++j) {
        const auto& [name, w] = coords[j];
        cx_vars.push_back({name, VarKind::Complex, w, 2 * j + 1});
        cx_vars.push_back({name, VarKind::Conjugate, w, 2 * j});
        sp.z.push_back(2 * j);
        sp.zb.push_back(2 * j + 1);
        std::string n = std::to_string(j + 1);
        re_vars.push_back({"x" + n, VarKind::Real, w, -1});
        re_vars.push_back({"y" + n, VarKind::Real, w, -1});
        sp.x.push_back(2 * j);
        sp.y.push_back(2 * j + 1);
    }
    int base = static_cast<int>(cx_vars.size());
    std::vector<VarInfo> param_vars;
    for (const ParamDecl& p : params) param_vars.push_back({p.name, VarKind::Param, 0, -1});
    for (size_t a = 0; a < params.size(); ++a) {
        if (params[a].conj.empty()) continue;
        for (size_t b = 0; b < params.size(); ++b)
            if (params[b].name == params[a].conj) {
                param_vars[a].conj = base + static_cast<int>(b);
                break;
            }
        if (param_vars[a].conj < 0)
            throw std::invalid_argument("make_space: missing paired parameter '" +
                                        params[a].conj + "'");
    }
    for (const VarInfo& v : param_vars) {
        cx_vars.push_back(v);
        re_vars.push_back(v);
    }
    sp.cx = VarTable::make(cx_vars);
    sp.re = VarTable::make(re_vars);
    return sp;
}

Poly Space::to_real(const Poly& f_cx) const {
    std::map<int, Poly> bind;
    for (int j = 0; j < 3; ++j) {
        Poly xj = Poly::var(re, x[j]);
        Poly yj = Poly::var(re, y[j]);
        bind[z[j]] = xj + yj * ExactScalar::i();
        bind[zb[j]] = xj - yj * ExactScalar::i();
    }
    return f_cx.substitute(bind, re);
}

Poly Space::to_complex(const Poly& f_re) const {
    std::map<int, Poly> bind;
    ExactScalar half(ratio(1, 2));
    ExactScalar mihalf = ExactScalar(Quad(), Quad(ratio(-1, 2)));  // -i/2
    for (int j = 0; j < 3; ++j) {
        Poly zj = Poly::var(cx, z[j]);
        Poly zbj = Poly::var(cx, zb[j]);
        bind[x[j]] = (zj + zbj) * half;
        bind[y[j]] = (zj - zbj) * mihalf;
    }
    return f_re.substitute(bind, cx);
}

std::vector<std::optional<ExactScalar>> Space::point_values(
    const std::array<ExactScalar, 3>& p) const {
    std::vector<std::optional<ExactScalar>> values(cx->size());
    for (int j = 0; j < 3; ++j) {
        values[z[j]] = p[j];
        values[zb[j]] = p[j].conj();
    }
    return values;
}

std::vector<std::complex<double>> Space::point_values_numeric(
    const std::array<std::complex<double>, 3>& p) const {
    std::vector<std::complex<double>> values(cx->size(), 0.0);
    for (int j = 0; j < 3; ++j) {
        values[z[j]] = p[j];
        values[zb[j]] = std::conj(p[j]);
    }
    return values;
}

}  // namespace crmodel
