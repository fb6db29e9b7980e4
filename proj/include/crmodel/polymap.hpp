#pragma once

#include <array>
#include <optional>

#include "crmodel/vfield.hpp"

namespace crmodel {

// Polynomial map between two copies of C^3 with an optionally declared
// polynomial inverse. The inverse, when given, is verified exactly at
// construction (both compositions must reduce to the identity).
class PolyMap {
public:
    // fwd[j]: image of the j-th destination complex coordinate, over src.
    PolyMap(VarTablePtr src, VarTablePtr dst, std::array<Poly, 3> fwd);
    PolyMap(VarTablePtr src, VarTablePtr dst, std::array<Poly, 3> fwd, std::array<Poly, 3> inv);

    const VarTablePtr& src() const { return src_; }
    const VarTablePtr& dst() const { return dst_; }
    const Poly& forward(int j) const { return fwd_.at(j); }
    bool has_verified_inverse() const { return inv_.has_value(); }
    const Poly& inverse(int j) const;

    // f over the destination table -> f o F over the source table; conjugate
    // coordinates are bound to the conjugated images.
    Poly pullback(const Poly& f) const;

    // The field Y with Y(g) = X(g o F) o F^{-1}; requires a verified inverse.
    HoloVField pushforward(const HoloVField& X) const;

    // outer o inner (inner: A -> B, outer: B -> C).
    static PolyMap compose(const PolyMap& outer, const PolyMap& inner);

    // Image of an exact point (parameters must not occur in the images).
    std::array<ExactScalar, 3> apply_point(const std::array<ExactScalar, 3>& p) const;

    std::string str() const;

private:
    void verify_inverse() const;

    VarTablePtr src_;
    VarTablePtr dst_;
    std::array<Poly, 3> fwd_;
    std::optional<std::array<Poly, 3>> inv_;
};

}  // namespace crmodel
