#pragma once

#include "crmodel/hypersurface.hpp"

namespace crmodel {

// Weight-k piece of the infinitesimal automorphism algebra of a tube-type
// hypersurface, computed as an exact nullspace of the tangency condition.
struct GradedComponent {
    int k = 0;
    std::vector<HoloVField> basis;
    int dim() const { return static_cast<int>(basis.size()); }
};

// All monomial fields of exact weight k: coefficient monomial weight plus
// derivation weight, the derivation along z_j carrying -weight(z_j).
std::vector<HoloVField> weight_ansatz(const VarTablePtr& table, int k);

// Exact graded stabilizer over k in [k_min, k_max]. Pre: M has a chart whose
// denominator base is a monomial power.
std::vector<GradedComponent> graded_stabilizer(const Hypersurface& M, int k_min, int k_max);

// Brackets of basis fields land in the computed span at the summed weight
// (a missing component forces the bracket to vanish).
bool bracket_closure_check(const std::vector<GradedComponent>& components);

std::string dims_str(const std::vector<GradedComponent>& components);

}  // namespace crmodel
