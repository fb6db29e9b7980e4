#include "crmodel/hypersurface.hpp"

#include <stdexcept>

namespace crmodel {

Hypersurface make_hypersurface_from_real(std::string name, Space space,
                                         std::vector<Poly> rho_real,
                                         std::optional<Chart> chart,
                                         std::vector<std::string> side) {
    Hypersurface m;
    m.name = std::move(name);
    m.space = std::move(space);
    m.rho_real = std::move(rho_real);
    for (const Poly& r : m.rho_real) {
        Poly cx = m.space.to_complex(r);
        if (!cx.is_real_form())
            throw std::invalid_argument("Hypersurface '" + m.name + "': rho is not real");
        m.rho_cx.push_back(std::move(cx));
    }
    m.chart = std::move(chart);
    m.side = std::move(side);
    if (m.chart && !chart_valid(m))
        throw std::invalid_argument("Hypersurface '" + m.name + "': chart does not satisfy rho");
    return m;
}

namespace {

int clearing_power(const Poly& f,
                   const std::vector<std::optional<std::pair<Poly, int>>>& images) {
    int K = 0;
    for (const auto& [e, c] : f.terms()) {
        (void)c;
        int k = 0;
        for (size_t v = 0; v < e.size(); ++v)
            if (e[v] > 0 && images[v]) k += e[v] * images[v]->second;
        K = std::max(K, k);
    }
    return K;
}

}  // namespace

Poly substitute_rational(const Poly& f,
                         const std::vector<std::optional<std::pair<Poly, int>>>& images,
                         const Poly& base, const VarTablePtr& target) {
    if (images.size() != f.table()->size())
        throw std::invalid_argument("substitute_rational: images size mismatch");
    int K = clearing_power(f, images);
    std::map<std::pair<int, int>, Poly> pow_cache;
    std::vector<Poly> base_pows{Poly::constant(target, ExactScalar::one())};
    auto base_pow = [&](int k) -> const Poly& {
        while (static_cast<int>(base_pows.size()) <= k) base_pows.push_back(base_pows.back() * base);
        return base_pows[k];
    };
    auto var_pow = [&](int v, int e) -> const Poly& {
        auto key = std::make_pair(v, e);
        auto it = pow_cache.find(key);
        if (it != pow_cache.end()) return it->second;
        Poly img;
        if (images[v]) {
            img = images[v]->first;
        } else {
            // Carried across by name, as in Poly::substitute.
            const VarInfo& info = f.table()->info(v);
            if (info.kind == VarKind::Conjugate) {
                int partner = target->find(f.table()->info(info.conj).name);
                if (partner < 0)
                    throw std::invalid_argument("substitute_rational: missing conjugate image");
                img = Poly::var(target, target->conj_index(partner));
            } else {
                img = Poly::var(target, target->index_of(info.name));
            }
        }
        return pow_cache.emplace(key, img.pow(e)).first->second;
    };

    Poly out(target);
    for (const auto& [e, c] : f.terms()) {
        int k = 0;
        Poly term = Poly::constant(target, c);
        for (size_t v = 0; v < e.size(); ++v) {
            if (e[v] == 0) continue;
            term = term * var_pow(static_cast<int>(v), e[v]);
            if (images[v]) k += e[v] * images[v]->second;
        }
        out += term * base_pow(K - k);
    }
    return out;
}

namespace {

std::vector<std::optional<std::pair<Poly, int>>> real_images(const Hypersurface& M) {
    const Chart& ch = *M.chart;
    std::vector<std::optional<std::pair<Poly, int>>> images(M.space.re->size());
    for (int j = 0; j < 3; ++j) {
        images[M.space.x[j]] = std::make_pair(ch.num[2 * j], ch.den_pow[2 * j]);
        images[M.space.y[j]] = std::make_pair(ch.num[2 * j + 1], ch.den_pow[2 * j + 1]);
    }
    return images;
}

}  // namespace

Poly chart_numerator(const Hypersurface& M, const Poly& f_cx) {
    if (!M.chart) throw std::invalid_argument("chart_numerator: surface has no chart");
    Poly f_re = M.space.to_real(f_cx);
    return substitute_rational(f_re, real_images(M), M.chart->base, M.chart->params);
}

std::vector<Poly> chart_numerators_aligned(const Hypersurface& M, const std::vector<Poly>& fs_cx) {
    if (!M.chart) throw std::invalid_argument("chart_numerators_aligned: surface has no chart");
    auto images = real_images(M);
    std::vector<Poly> reals;
    reals.reserve(fs_cx.size());
    int K = 0;
    for (const Poly& f : fs_cx) {
        reals.push_back(M.space.to_real(f));
        K = std::max(K, clearing_power(reals.back(), images));
    }
    std::vector<Poly> base_pows{Poly::constant(M.chart->params, ExactScalar::one())};
    auto base_pow = [&](int k) -> const Poly& {
        while (static_cast<int>(base_pows.size()) <= k)
            base_pows.push_back(base_pows.back() * M.chart->base);
        return base_pows[k];
    };
    std::vector<Poly> out;
    out.reserve(fs_cx.size());
    for (const Poly& f : reals) {
        int k = clearing_power(f, images);
        out.push_back(substitute_rational(f, images, M.chart->base, M.chart->params) *
                      base_pow(K - k));
    }
    return out;
}

bool chart_valid(const Hypersurface& M) {
    if (!M.chart) return false;
    auto images = real_images(M);
    for (const Poly& rho : M.rho_real)
        if (!substitute_rational(rho, images, M.chart->base, M.chart->params).is_zero())
            return false;
    return true;
}

Poly lie_derivative_real(const HoloVField& X, const Hypersurface& M, size_t which) {
    if (!X.table()->same_as(*M.space.cx))
        throw std::invalid_argument("lie_derivative_real: field/surface table mismatch");
    const Poly& rho = M.rho_cx.at(which);
    Poly l(M.space.cx);
    for (int j = 0; j < 3; ++j) {
        if (X.coeff(j).is_zero()) continue;
        l += X.coeff(j) * rho.diff(M.space.z[j]);
    }
    return l + l.conjugate();
}

bool tangency_chart(const HoloVField& X, const Hypersurface& M) {
    if (!M.chart) throw std::invalid_argument("tangency_chart: surface has no chart");
    for (size_t i = 0; i < M.rho_cx.size(); ++i)
        if (!chart_numerator(M, lie_derivative_real(X, M, i)).is_zero()) return false;
    return true;
}

bool tangency_divisibility(const HoloVField& X, const Hypersurface& M) {
    if (M.codim() != 1)
        throw std::invalid_argument("tangency_divisibility: needs a single defining polynomial");
    Poly d = lie_derivative_real(X, M, 0);
    if (d.is_zero()) return true;
    return d.divide_exact(M.rho_cx[0]).has_value();
}

bool relative_invariant_check(const Poly& p_cx, const PolyMap& action, int weight,
                              const std::string& weight_carrier) {
    Poly lhs = action.pullback(p_cx);
    Poly lam = Poly::var(action.src(), action.src()->index_of(weight_carrier));
    Poly rhs = lam.pow(weight) * p_cx;
    return lhs == rhs;
}

namespace {

bool free_of_coordinates(const Poly& q, const Space& sp) {
    for (const auto& [e, c] : q.terms()) {
        (void)c;
        for (int j = 0; j < 3; ++j)
            if (e[sp.z[j]] > 0 || e[sp.zb[j]] > 0) return false;
    }
    return true;
}

}  // namespace

bool map_transforms(const PolyMap& f, const Hypersurface& source, const Hypersurface& target) {
    if (!f.src()->same_as(*source.space.cx) || !f.dst()->same_as(*target.space.cx))
        throw std::invalid_argument("map_transforms: table mismatch");
    for (const Poly& rho_t : target.rho_cx) {
        Poly pulled = f.pullback(rho_t);
        bool matched = false;
        for (const Poly& rho_s : source.rho_cx) {
            auto q = pulled.divide_exact(rho_s);
            if (q && !q->is_zero() && free_of_coordinates(*q, source.space)) {
                matched = true;
                break;
            }
        }
        if (!matched) return false;
    }
    return true;
}

}  // namespace crmodel
