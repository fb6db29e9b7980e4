#pragma once

#include <array>
#include <string>
#include <vector>

#include "crmodel/linalg.hpp"
#include "crmodel/poly.hpp"

namespace crmodel {

// Holomorphic polynomial vector field on C^3: three coefficient polynomials
// for the derivations along the table's complex coordinates. The associated
// real field is 2Re(X); brackets of such real fields are computed on the
// holomorphic parts since [X, conj(Y)] = 0.
class HoloVField {
public:
    HoloVField() = default;
    HoloVField(VarTablePtr table, std::array<Poly, 3> coeffs);

    static HoloVField zero(VarTablePtr table);
    // coeff * d/d(var name)
    static HoloVField deriv(VarTablePtr table, const std::string& var, const Poly& coeff);

    const VarTablePtr& table() const { return table_; }
    const Poly& coeff(int j) const { return coeffs_.at(j); }
    const std::array<Poly, 3>& coeffs() const { return coeffs_; }
    // Table index of the j-th complex coordinate.
    int direction(int j) const { return table_->complex_vars().at(j); }

    bool is_zero() const;

    HoloVField operator+(const HoloVField& o) const;
    HoloVField operator-(const HoloVField& o) const;
    HoloVField operator-() const;
    HoloVField operator*(const ExactScalar& c) const;
    bool operator==(const HoloVField& o) const;

    // X(f) = sum_j coeff_j * df/dz_j.
    Poly apply(const Poly& f) const;

    // [X,Y]^j = X(Y^j) - Y(X^j).
    HoloVField bracket(const HoloVField& o) const;

    // Weight of a term = monomial weight + derivation weight, the derivation
    // along z_j carrying -weight(z_j).
    std::vector<std::pair<int, HoloVField>> graded_decompose() const;
    HoloVField weight_component(int k) const;
    bool weight_homogeneous() const;

    std::array<std::complex<double>, 3> eval_complex(
        const std::vector<std::complex<double>>& values) const;
    std::array<ExactScalar, 3> eval(const std::vector<std::optional<ExactScalar>>& values) const;

    std::string str() const;

private:
    VarTablePtr table_;
    std::array<Poly, 3> coeffs_;
};

HoloVField operator*(const ExactScalar& c, const HoloVField& X);

// Coordinate rows for a family of fields over the union of their monomials,
// with real and imaginary parts split into separate columns, so that
// real-span questions become exact linear algebra.
std::vector<Row> field_vectors(const std::vector<HoloVField>& fields);

// Real-linear independence of the fields.
bool fields_independent(const std::vector<HoloVField>& fields);

// Coefficients of X in the real span of `span`, if it lies there.
std::optional<Row> field_in_real_span(const HoloVField& X, const std::vector<HoloVField>& span);

bool field_spans_equal(const std::vector<HoloVField>& a, const std::vector<HoloVField>& b);

}  // namespace crmodel
