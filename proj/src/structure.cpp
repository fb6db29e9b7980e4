#include "crmodel/structure.hpp"

#include <stdexcept>
#include <tuple>

namespace crmodel {

bool StructureTable::antisymmetric() const {
    size_t n = dim();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            for (size_t k = 0; k < n; ++k)
                if (c[i][j][k] != -c[j][i][k]) return false;
    return true;
}

bool StructureTable::jacobi_holds() const {
    size_t n = dim();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            for (size_t k = 0; k < n; ++k)
                for (size_t l = 0; l < n; ++l) {
                    ExactScalar sum;
                    for (size_t m = 0; m < n; ++m) {
                        sum += c[i][j][m] * c[m][k][l];
                        sum += c[j][k][m] * c[m][i][l];
                        sum += c[k][i][m] * c[m][j][l];
                    }
                    if (!sum.is_zero()) return false;
                }
    return true;
}

std::string StructureTable::str() const {
    std::string out;
    size_t n = dim();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) {
            std::string rhs;
            for (size_t k = 0; k < n; ++k) {
                if (c[i][j][k].is_zero()) continue;
                std::string cs = c[i][j][k].str();
                std::string term = cs == "1" ? labels[k]
                                 : cs == "-1" ? "-" + labels[k]
                                 : (cs.find(' ') != std::string::npos ? "(" + cs + ")" : cs) + "*" +
                                       labels[k];
                if (rhs.empty()) rhs = term;
                else if (term[0] == '-') rhs += " - " + term.substr(1);
                else rhs += " + " + term;
            }
            if (rhs.empty()) rhs = "0";
            out += "[" + labels[i] + "," + labels[j] + "] = " + rhs + "\n";
        }
    return out;
}

StructureTable make_structure_table(
    std::vector<std::string> labels,
    const std::vector<std::tuple<int, int, int, ExactScalar>>& entries) {
    size_t n = labels.size();
    StructureTable t;
    t.labels = std::move(labels);
    t.c.assign(n, std::vector<Row>(n, Row(n, ExactScalar::zero())));
    for (const auto& [i, j, k, v] : entries) {
        t.c[i][j][k] = v;
        t.c[j][i][k] = -v;
    }
    return t;
}

ClosureResult closure_table(const std::vector<HoloVField>& basis, std::vector<std::string> labels) {
    ClosureResult res;
    size_t n = basis.size();
    if (labels.empty())
        for (size_t i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i));
    if (!fields_independent(basis))
        throw std::invalid_argument("closure_table: basis fields are linearly dependent over R");

    StructureTable t;
    t.labels = std::move(labels);
    t.c.assign(n, std::vector<Row>(n, Row(n, ExactScalar::zero())));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) {
            HoloVField b = basis[i].bracket(basis[j]);
            auto coeffs = field_in_real_span(b, basis);
            if (!coeffs) {
                res.closed = false;
                res.bad_i = static_cast<int>(i);
                res.bad_j = static_cast<int>(j);
                res.bad_bracket = b;
                return res;
            }
            for (size_t k = 0; k < n; ++k) {
                t.c[i][j][k] = (*coeffs)[k];
                t.c[j][i][k] = -(*coeffs)[k];
            }
        }
    res.closed = true;
    res.table = std::move(t);
    return res;
}

std::string MatchReport::str() const {
    if (!closed) return "not closed";
    if (ok) return "match";
    std::string out = "deviations:\n";
    for (const auto& d : deviations)
        out += "  c[" + std::to_string(d.i) + "][" + std::to_string(d.j) + "]^" +
               std::to_string(d.k) + ": got " + d.got.str() + ", want " + d.want.str() + "\n";
    return out;
}

MatchReport verify_structure(const std::vector<HoloVField>& basis, const StructureTable& expected,
                             const std::vector<ExactScalar>& rescalings) {
    if (basis.size() != expected.dim() || rescalings.size() != expected.dim())
        throw std::invalid_argument("verify_structure: dimension mismatch");
    MatchReport rep;
    ClosureResult cl = closure_table(basis, expected.labels);
    if (!cl.closed) return rep;
    rep.closed = true;
    size_t n = basis.size();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            for (size_t k = 0; k < n; ++k) {
                ExactScalar want =
                    expected.entry(i, j, k) * rescalings[k] / (rescalings[i] * rescalings[j]);
                ExactScalar got = cl.table->entry(i, j, k);
                if (got != want)
                    rep.deviations.push_back({static_cast<int>(i), static_cast<int>(j),
                                              static_cast<int>(k), got, want});
            }
    rep.ok = rep.deviations.empty();
    return rep;
}

}  // namespace crmodel
