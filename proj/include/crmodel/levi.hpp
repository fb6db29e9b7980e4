#pragma once

#include <array>

#include "crmodel/hypersurface.hpp"

namespace crmodel {

// Exact Levi data of a hypersurface at a rational point: the complex Hessian
// of rho restricted to the complex tangent plane, with its inertia decided in
// the real subfield of Q(i)[sqrt2].
struct LeviReport {
    std::array<ExactScalar, 3> point;
    std::array<ExactScalar, 3> gradient;                  // rho_{z_j} at the point
    std::array<std::array<ExactScalar, 3>, 2> tangent;    // basis of the complex tangent
    std::array<std::array<ExactScalar, 2>, 2> form;       // restricted Hermitian matrix
    int n_plus = 0, n_minus = 0, n_zero = 0;
    // Sign applied to rho so that d(rho)/dy3 > 0 at the point when that
    // derivative is nonzero; signatures are reported in this orientation.
    int orientation = 1;
    bool orientation_fixed = false;

    int rank() const { return n_plus + n_minus; }
    std::string signature_str() const;
    std::string str() const;
};

// Pre: the point satisfies rho = 0 exactly and the gradient is nonzero there.
LeviReport levi_at(const Hypersurface& M, const std::array<ExactScalar, 3>& point,
                   size_t which_rho = 0);

// Rank over R of the values 2Re(X_i) at the point.
int field_rank_at(const std::vector<HoloVField>& fields, const Space& sp,
                  const std::array<ExactScalar, 3>& point);

}  // namespace crmodel
