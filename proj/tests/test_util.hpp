#pragma once

#include "crmodel/poly.hpp"

namespace crmodel::testutil {

inline ExactScalar q(long n, long d = 1) { return ExactScalar(ratio(n, d)); }

// Real variables y1, y2, y3, u1, u2, u3 (weights 1, 2, 3 on the y's).
inline VarTablePtr ytable() {
    static VarTablePtr t = VarTable::make({{"y1", VarKind::Real, 1, -1},
                                           {"y2", VarKind::Real, 2, -1},
                                           {"y3", VarKind::Real, 3, -1},
                                           {"u1", VarKind::Real, 0, -1},
                                           {"u2", VarKind::Real, 0, -1},
                                           {"u3", VarKind::Real, 0, -1}});
    return t;
}

inline Poly v(const VarTablePtr& t, const std::string& name) { return Poly::var(t, name); }

}  // namespace crmodel::testutil
