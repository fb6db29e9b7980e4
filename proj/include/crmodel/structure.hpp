#pragma once

#include <optional>
#include <string>
#include <vector>

#include "crmodel/vfield.hpp"

namespace crmodel {

// Structure constants [e_i, e_j] = sum_k c_ij^k e_k of a real Lie algebra,
// stored antisymmetrically with entries in the real subfield.
struct StructureTable {
    std::vector<std::string> labels;
    std::vector<std::vector<Row>> c;  // c[i][j] is the coordinate row of [e_i, e_j]

    size_t dim() const { return labels.size(); }
    const ExactScalar& entry(int i, int j, int k) const { return c[i][j][k]; }

    bool antisymmetric() const;
    bool jacobi_holds() const;
    std::string str() const;
};

StructureTable make_structure_table(std::vector<std::string> labels,
                                    const std::vector<std::tuple<int, int, int, ExactScalar>>& entries);

struct ClosureResult {
    bool closed = false;
    std::optional<StructureTable> table;
    // When not closed: the offending pair and its bracket.
    int bad_i = -1, bad_j = -1;
    std::optional<HoloVField> bad_bracket;
};

// Expresses every pairwise bracket in the real span of the basis.
// Pre: the fields are linearly independent over R.
ClosureResult closure_table(const std::vector<HoloVField>& basis,
                            std::vector<std::string> labels = {});

struct Deviation {
    int i, j, k;
    ExactScalar got, want;
};

struct MatchReport {
    bool closed = false;
    bool ok = false;
    std::vector<Deviation> deviations;
    std::string str() const;
};

// Checks closure_table(basis) against `expected` after the declared diagonal
// rescaling phi(a_k) = d_k b_k: concrete c_ij^k must equal
// expected c_ij^k * d_k / (d_i d_j). Deviations are data, not errors.
MatchReport verify_structure(const std::vector<HoloVField>& basis,
                             const StructureTable& expected,
                             const std::vector<ExactScalar>& rescalings);

}  // namespace crmodel
