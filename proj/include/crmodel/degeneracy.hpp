#pragma once

#include "crmodel/hypersurface.hpp"

namespace crmodel {

// Exact nullspace of "sum_j f_j rho_{z_j} = 0 on M" over holomorphic
// polynomial ansatz fields of total degree <= degree_bound. A nonempty basis
// certifies holomorphic degeneracy at that bound. Pre: M has a chart.
std::vector<HoloVField> holomorphic_degeneracy_search(const Hypersurface& M, int degree_bound);

}  // namespace crmodel
