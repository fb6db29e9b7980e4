#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "crmodel/hypersurface.hpp"
#include "crmodel/polymap.hpp"
#include "crmodel/structure.hpp"

namespace crmodel::catalog {

// nullopt binds the parameter as a formal table variable.
using ParamArg = std::optional<ExactScalar>;
using Params = std::map<std::string, ParamArg>;

struct CatalogEntry {
    std::string name;
    std::string kind;  // algebra | hypersurface | map | group-family
    std::vector<std::pair<std::string, std::string>> parameters;  // (name, rational|formal)
    std::string note;
};

// The ambient chart of C^3 with coordinates z, w2, w3 of weights 1, 2, 3 and
// the group parameters lambda, p, conj p, q2, q3.
const Space& ambient_space();
// The tube chart with coordinates z1, z2, z3 of weights 1, 2, 3 and the
// family/group parameters nu, beta, gamma, delta, s, n, lambda, t, r, a1..a3.
const Space& tube_space();
// z1, z2, w3 with weights 1, 1, 2; used for the graded quadric computation.
const Space& quadric_space();

const std::vector<std::string>& algebra_labels();  // X3, X2, X1, X1', X0

// Bracket relations of the model algebra in the abstract normalization.
const StructureTable& abstract_relations();

// Documented diagonal rescaling aligning each realization with the abstract
// relations; these are the only deviations the closure oracle finds.
std::vector<ExactScalar> algebra_rescaling(const std::string& name);

// Basis fields in the order X3, X2, X1, X1', X0.
// Names: g, g_tilde, A (parameter s, n), A0, A1, B.
std::vector<HoloVField> make_algebra(const std::string& name, const Params& params = {});

// Names: C, C_tilde, N_plus, N_minus, N0, S, Q, Pi, quadric_indef,
// quadric_zw, quadric_indef_graded, light_cone_tube, sphere_cylinder,
// hyperplane, hypersurface5, quadric_imw3.
Hypersurface make_hypersurface(const std::string& name, const Params& params = {});

// Names: tube_to_ambient, flip, tube_flip, dilation, translation, action,
// tube_dilation, tube_translation, gtilde_imag_translation, a1_shear,
// a0_shear_t, a0_shear_r, b_dilation, b_shear_r, b_shear_t, s_family_change,
// h5_kill_pluriharmonic, h5_w2_change, h5_to_quadric, imw3_from_indefinite,
// qbeta_step1, qbeta_step2, qbeta_to_quadric_zw, quadric_zw_to_indefinite,
// qbeta_to_indefinite, s0_to_cone.
PolyMap make_map(const std::string& name, const Params& params = {});

// Exact proportionality scalars of the basis pushforward under
// tube_to_ambient: pushforward(X_i of g_tilde) = scalar_i * (X_i of g).
std::vector<ExactScalar> map6_basis_scalars();

// The relative invariants of the ambient action.
Poly invariant_P();
Poly invariant_Q();

std::vector<CatalogEntry> manifest();

}  // namespace crmodel::catalog
