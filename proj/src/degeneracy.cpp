#include "crmodel/degeneracy.hpp"

#include <map>
#include <stdexcept>

namespace crmodel {

namespace {

// All exponent vectors over the complex coordinates with total degree <= d.
void enumerate_monomials(int d, int pos, Expvec& cur, const std::vector<int>& zidx,
                         std::vector<Expvec>& out) {
    if (pos == 3) {
        out.push_back(cur);
        return;
    }
    for (int e = 0; e <= d; ++e) {
        cur[zidx[pos]] = e;
        enumerate_monomials(d - e, pos + 1, cur, zidx, out);
    }
    cur[zidx[pos]] = 0;
}

}  // namespace

std::vector<HoloVField> holomorphic_degeneracy_search(const Hypersurface& M, int degree_bound) {
    if (!M.chart) throw std::invalid_argument("degeneracy search: surface has no chart");
    if (M.codim() != 1)
        throw std::invalid_argument("degeneracy search: needs a single defining polynomial");
    const Space& sp = M.space;

    std::vector<Expvec> monos;
    Expvec cur(sp.cx->size(), 0);
    enumerate_monomials(degree_bound, 0, cur, sp.z, monos);

    // Ansatz slots: monomial * d/dz_j; the condition is C-linear in the slots.
    struct Slot {
        int j;
        Expvec mono;
    };
    std::vector<Slot> slots;
    std::vector<Poly> terms;
    std::array<Poly, 3> rho_z;
    for (int j = 0; j < 3; ++j) rho_z[j] = M.rho_cx[0].diff(sp.z[j]);
    for (int j = 0; j < 3; ++j)
        for (const Expvec& e : monos) {
            slots.push_back({j, e});
            terms.push_back(rho_z[j] * Poly::monomial(sp.cx, e, ExactScalar::one()));
        }
    std::vector<Poly> nums = chart_numerators_aligned(M, terms);

    // One equation per chart monomial occurring in any slot image.
    std::map<Expvec, int, GrlexLess> eq_index;
    for (const Poly& n : nums)
        for (const auto& [e, c] : n.terms()) {
            (void)c;
            eq_index.emplace(e, 0);
        }
    int rows = 0;
    for (auto& [e, idx] : eq_index) idx = rows++;
    std::vector<std::vector<std::pair<int, ExactScalar>>> by_row(rows);
    for (size_t s = 0; s < slots.size(); ++s)
        for (const auto& [e, c] : nums[s].terms())
            by_row[eq_index.at(e)].emplace_back(static_cast<int>(s), c);

    RowReducer red(static_cast<int>(slots.size()));
    Row row(slots.size(), ExactScalar::zero());
    for (int r = 0; r < rows && red.rank() < static_cast<int>(slots.size()); ++r) {
        if (by_row[r].empty()) continue;
        std::fill(row.begin(), row.end(), ExactScalar::zero());
        for (const auto& [s, c] : by_row[r]) row[s] = c;
        red.add_row(row);
    }

    std::vector<HoloVField> basis;
    for (const Row& x : red.nullspace()) {
        std::array<Poly, 3> coeffs = {Poly(sp.cx), Poly(sp.cx), Poly(sp.cx)};
        for (size_t s = 0; s < slots.size(); ++s)
            if (!x[s].is_zero()) coeffs[slots[s].j] += Poly::monomial(sp.cx, slots[s].mono, x[s]);
        basis.emplace_back(sp.cx, std::move(coeffs));
    }
    return basis;
}

}  // namespace crmodel
