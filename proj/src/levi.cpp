#include "crmodel/levi.hpp"

#include <stdexcept>

namespace crmodel {

std::string LeviReport::signature_str() const {
    return "(" + std::to_string(n_plus) + "," + std::to_string(n_minus) + "," +
           std::to_string(n_zero) + ")";
}

std::string LeviReport::str() const {
    std::string out = "point (" + point[0].str() + ", " + point[1].str() + ", " +
                      point[2].str() + ")  signature " + signature_str();
    if (!orientation_fixed) out += "  [orientation free]";
    else if (orientation < 0) out += "  [rho negated for orientation]";
    return out;
}

LeviReport levi_at(const Hypersurface& M, const std::array<ExactScalar, 3>& point,
                   size_t which_rho) {
    const Poly& rho = M.rho_cx.at(which_rho);
    const Space& sp = M.space;
    auto values = sp.point_values(point);
    if (!rho.eval(values).is_zero())
        throw std::invalid_argument("levi_at: point is not on the surface");

    LeviReport rep;
    rep.point = point;
    for (int j = 0; j < 3; ++j) rep.gradient[j] = rho.diff(sp.z[j]).eval(values);
    bool grad_zero = rep.gradient[0].is_zero() && rep.gradient[1].is_zero() &&
                     rep.gradient[2].is_zero();
    if (grad_zero) throw std::invalid_argument("levi_at: singular point (zero gradient)");

    // Orientation: normalize so d(rho)/dy3 = -2 Im rho_{z3} > 0 where nonzero.
    ExactScalar dy3 = ExactScalar(Quad(ratio(-2)) * rep.gradient[2].im());
    if (!dy3.is_zero()) {
        rep.orientation_fixed = true;
        rep.orientation = dy3.sign();
    }

    // Complex tangent: nullspace of the gradient row.
    RowReducer red(3);
    red.add_row({rep.gradient[0], rep.gradient[1], rep.gradient[2]});
    auto tangent = red.nullspace();
    if (tangent.size() != 2) throw std::logic_error("levi_at: tangent space is not 2-dimensional");
    for (int a = 0; a < 2; ++a)
        for (int j = 0; j < 3; ++j) rep.tangent[a][j] = tangent[a][j];

    // Complex Hessian rho_{z_j conj(z_k)} at the point.
    std::array<std::array<ExactScalar, 3>, 3> hess;
    for (int j = 0; j < 3; ++j) {
        Poly dj = rho.diff(sp.z[j]);
        for (int k = 0; k < 3; ++k) hess[j][k] = dj.diff(sp.zb[k]).eval(values);
    }
    ExactScalar orient(Quad(ratio(rep.orientation)));
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
            ExactScalar s;
            for (int j = 0; j < 3; ++j)
                for (int k = 0; k < 3; ++k)
                    s += hess[j][k] * rep.tangent[a][j] * rep.tangent[b][k].conj();
            rep.form[a][b] = s * orient;
        }
    if (rep.form[0][1] != rep.form[1][0].conj() || !rep.form[0][0].is_real() ||
        !rep.form[1][1].is_real())
        throw std::logic_error("levi_at: restricted form is not Hermitian");

    // Inertia of a 2x2 Hermitian matrix from det and trace signs.
    ExactScalar det = rep.form[0][0] * rep.form[1][1] - rep.form[0][1] * rep.form[1][0];
    ExactScalar trace = rep.form[0][0] + rep.form[1][1];
    int sd = det.sign();
    int st = trace.sign();
    if (sd > 0) {
        rep.n_plus = st > 0 ? 2 : 0;
        rep.n_minus = st > 0 ? 0 : 2;
    } else if (sd < 0) {
        rep.n_plus = rep.n_minus = 1;
    } else if (st != 0) {
        rep.n_plus = st > 0 ? 1 : 0;
        rep.n_minus = st > 0 ? 0 : 1;
        rep.n_zero = 1;
    } else {
        rep.n_zero = 2;
    }
    rep.n_zero = 2 - rep.n_plus - rep.n_minus;
    return rep;
}

int field_rank_at(const std::vector<HoloVField>& fields, const Space& sp,
                  const std::array<ExactScalar, 3>& point) {
    RowReducer red(6);
    auto values = sp.point_values(point);
    for (const HoloVField& X : fields) {
        auto v = X.eval(values);
        Row row(6);
        for (int j = 0; j < 3; ++j) {
            row[2 * j] = ExactScalar(v[j].re());
            row[2 * j + 1] = ExactScalar(v[j].im());
        }
        red.add_row(std::move(row));
    }
    return red.rank();
}

}  // namespace crmodel
