#include "crmodel/stabilizer.hpp"

#include <map>
#include <stdexcept>

namespace crmodel {

namespace {

void enumerate_weighted(const VarTablePtr& table, const std::vector<int>& zidx, int target,
                        size_t pos, Expvec& cur, std::vector<Expvec>& out) {
    if (pos == zidx.size()) {
        if (target == 0) out.push_back(cur);
        return;
    }
    int w = table->info(zidx[pos]).weight;
    if (w <= 0) throw std::invalid_argument("weight_ansatz: coordinates need positive weights");
    for (int e = 0; e * w <= target; ++e) {
        cur[zidx[pos]] = e;
        enumerate_weighted(table, zidx, target - e * w, pos + 1, cur, out);
    }
    cur[zidx[pos]] = 0;
}

}  // namespace

std::vector<HoloVField> weight_ansatz(const VarTablePtr& table, int k) {
    std::vector<HoloVField> out;
    const auto& zidx = table->complex_vars();
    for (size_t j = 0; j < zidx.size(); ++j) {
        int target = k + table->info(zidx[j]).weight;
        if (target < 0) continue;
        std::vector<Expvec> monos;
        Expvec cur(table->size(), 0);
        enumerate_weighted(table, zidx, target, 0, cur, monos);
        for (const Expvec& e : monos) {
            std::array<Poly, 3> coeffs = {Poly(table), Poly(table), Poly(table)};
            coeffs[j] = Poly::monomial(table, e, ExactScalar::one());
            out.emplace_back(table, std::move(coeffs));
        }
    }
    return out;
}

std::vector<GradedComponent> graded_stabilizer(const Hypersurface& M, int k_min, int k_max) {
    if (!M.chart) throw std::invalid_argument("graded_stabilizer: surface has no chart");
    if (M.codim() != 1)
        throw std::invalid_argument("graded_stabilizer: needs a single defining polynomial");
    if (M.chart->base.num_terms() > 1)
        throw std::invalid_argument(
            "graded_stabilizer: chart denominator base must be a monomial power");

    std::vector<GradedComponent> out;
    for (int k = k_min; k <= k_max; ++k) {
        std::vector<HoloVField> ansatz = weight_ansatz(M.space.cx, k);
        GradedComponent comp;
        comp.k = k;
        if (ansatz.empty()) {
            out.push_back(std::move(comp));
            continue;
        }
        // Real and imaginary slots for every monomial field.
        std::vector<HoloVField> slots;
        for (const HoloVField& m : ansatz) {
            slots.push_back(m);
            slots.push_back(m * ExactScalar::i());
        }
        std::vector<Poly> lies;
        lies.reserve(slots.size());
        for (const HoloVField& s : slots) lies.push_back(lie_derivative_real(s, M, 0));
        std::vector<Poly> nums = chart_numerators_aligned(M, lies);

        std::map<Expvec, int, GrlexLess> eq_index;
        for (const Poly& n : nums)
            for (const auto& [e, c] : n.terms()) {
                (void)c;
                eq_index.emplace(e, 0);
            }
        int rows = 0;
        for (auto& [e, idx] : eq_index) idx = rows++;
        std::vector<Row> eq(rows, Row(slots.size(), ExactScalar::zero()));
        for (size_t s = 0; s < slots.size(); ++s)
            for (const auto& [e, c] : nums[s].terms()) eq[eq_index.at(e)][s] = c;

        RowReducer red(static_cast<int>(slots.size()));
        for (const Row& r : eq) {
            // The unknown slot coefficients are real; split the equation.
            auto [re, im] = realify(r);
            red.add_row(std::move(re));
            red.add_row(std::move(im));
            if (red.rank() == static_cast<int>(slots.size())) break;
        }
        for (const Row& x : red.nullspace()) {
            HoloVField f = HoloVField::zero(M.space.cx);
            for (size_t s = 0; s < slots.size(); ++s)
                if (!x[s].is_zero()) f = f + slots[s] * x[s];
            comp.basis.push_back(std::move(f));
        }
        out.push_back(std::move(comp));
    }
    return out;
}

bool bracket_closure_check(const std::vector<GradedComponent>& components) {
    std::map<int, const GradedComponent*> by_weight;
    for (const GradedComponent& c : components) by_weight[c.k] = &c;
    for (const GradedComponent& a : components)
        for (const GradedComponent& b : components) {
            if (a.k > b.k) continue;
            for (const HoloVField& x : a.basis)
                for (const HoloVField& y : b.basis) {
                    HoloVField br = x.bracket(y);
                    if (br.is_zero()) continue;
                    auto it = by_weight.find(a.k + b.k);
                    if (it == by_weight.end()) return false;
                    if (!field_in_real_span(br, it->second->basis)) return false;
                }
        }
    return true;
}

std::string dims_str(const std::vector<GradedComponent>& components) {
    std::string out = "(";
    for (size_t i = 0; i < components.size(); ++i) {
        if (i) out += ", ";
        out += std::to_string(components[i].dim());
    }
    return out + ")";
}

}  // namespace crmodel
