#pragma once

#include <optional>
#include <string>
#include <vector>

#include "crmodel/polymap.hpp"
#include "crmodel/space.hpp"
#include "crmodel/vfield.hpp"

namespace crmodel {

// Rational parametrization of a real-algebraic set: each real coordinate
// x1,y1,x2,y2,x3,y3 is num[i] / base^den_pow[i] over the chart parameters.
struct Chart {
    VarTablePtr params;
    std::vector<Poly> num;     // size 6, over params
    std::vector<int> den_pow;  // size 6
    Poly base;                 // over params; constant 1 for polynomial charts
};

// Real-algebraic hypersurface (or, for the singular orbits, a codimension-2
// set given by two defining polynomials). Side constraints are open
// conditions recorded as metadata only.
struct Hypersurface {
    std::string name;
    Space space;
    std::vector<Poly> rho_cx;    // defining polynomials in z/conj(z) form
    std::vector<Poly> rho_real;  // the same over the real table
    std::optional<Chart> chart;
    std::vector<std::string> side;

    size_t codim() const { return rho_cx.size(); }
};

Hypersurface make_hypersurface_from_real(std::string name, Space space,
                                         std::vector<Poly> rho_real,
                                         std::optional<Chart> chart = std::nullopt,
                                         std::vector<std::string> side = {});

// Clears denominators of f at the images: returns the numerator of
// f(images) * base^K with the minimal K that clears every term.
Poly substitute_rational(const Poly& f,
                         const std::vector<std::optional<std::pair<Poly, int>>>& images,
                         const Poly& base, const VarTablePtr& target);

// Substitutes the chart into a polynomial over the complexified table and
// clears the denominator; zero iff f vanishes identically on the chart.
Poly chart_numerator(const Hypersurface& M, const Poly& f_cx);

// Batch form for linear solvers: every numerator is cleared at the same
// power of the chart base, so linear combinations remain meaningful.
std::vector<Poly> chart_numerators_aligned(const Hypersurface& M, const std::vector<Poly>& fs_cx);

// Chart substitution kills every defining polynomial.
bool chart_valid(const Hypersurface& M);

// (2Re X)(rho) for holomorphic X, computed as L + conj(L), L = sum X^j rho_{z_j}.
Poly lie_derivative_real(const HoloVField& X, const Hypersurface& M, size_t which = 0);

// Tangency through the chart: the Lie derivative of every defining polynomial
// vanishes identically after chart substitution.
bool tangency_chart(const HoloVField& X, const Hypersurface& M);

// Tangency as a divisibility identity: rho | (2Re X)(rho) in the polynomial
// ring, formal parameters included as variables.
bool tangency_divisibility(const HoloVField& X, const Hypersurface& M);

// P o action = lambda^weight * P as an exact identity in all coordinates and
// group parameters. The action maps the space to itself with formal
// parameters; `weight_carrier` names the dilation parameter.
bool relative_invariant_check(const Poly& p_cx, const PolyMap& action, int weight,
                              const std::string& weight_carrier);

// rho_target o F = cofactor * rho_source with a nonzero cofactor free of
// coordinate variables; this is the exact form of "F maps S into T".
// For codimension-2 pairs the check is applied factor by factor.
bool map_transforms(const PolyMap& f, const Hypersurface& source, const Hypersurface& target);

}  // namespace crmodel
