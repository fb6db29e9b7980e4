#pragma once

#include <string>
#include <vector>

#include "crmodel/poly.hpp"

namespace crmodel {

struct ParamDecl {
    std::string name;
    std::string conj;  // empty: formally real; otherwise the paired parameter
};

// A copy of C^3 with two coordinate presentations sharing the same formal
// parameters: the complexified table (z_j, conj(z_j), params) and the real
// table (x1, y1, x2, y2, x3, y3, params). z_j = x_j + i y_j throughout.
struct Space {
    VarTablePtr cx;
    VarTablePtr re;
    std::vector<int> z;   // indices of z_j in cx
    std::vector<int> zb;  // indices of conj(z_j) in cx
    std::vector<int> x;   // indices of x_j in re
    std::vector<int> y;   // indices of y_j in re

    // Exact conversion between the two presentations.
    Poly to_real(const Poly& f_cx) const;
    Poly to_complex(const Poly& f_re) const;

    // Value vector over cx for a complex point (conjugates filled in).
    std::vector<std::optional<ExactScalar>> point_values(
        const std::array<ExactScalar, 3>& p) const;
    std::vector<std::complex<double>> point_values_numeric(
        const std::array<std::complex<double>, 3>& p) const;
};

Space make_space(const std::vector<std::pair<std::string, int>>& coords,
                 const std::vector<ParamDecl>& params = {});

}  // namespace crmodel
