#pragma once

#include <complex>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "crmodel/scalar.hpp"
#include "crmodel/vartable.hpp"

namespace crmodel {

using Expvec = std::vector<int>;

// Graded lexicographic order on exponent vectors of equal length.
struct GrlexLess {
    bool operator()(const Expvec& a, const Expvec& b) const;
};

// Sparse multivariate polynomial over Q(i)[sqrt2] in the variables of a
// shared VarTable. Zero coefficients are never stored.
class Poly {
public:
    using TermMap = std::map<Expvec, ExactScalar, GrlexLess>;

    Poly() = default;
    explicit Poly(VarTablePtr table) : table_(std::move(table)) {}

    static Poly constant(VarTablePtr table, const ExactScalar& c);
    static Poly var(VarTablePtr table, int index);
    static Poly var(VarTablePtr table, const std::string& name);
    static Poly monomial(VarTablePtr table, Expvec exps, const ExactScalar& c);

    const VarTablePtr& table() const { return table_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t num_terms() const { return terms_.size(); }
    int total_degree() const;  // -1 for the zero polynomial

    ExactScalar coeff(const Expvec& e) const;
    // Adds c * x^e, dropping the term if the sum cancels.
    void add_term(const Expvec& e, const ExactScalar& c);

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const ExactScalar& c) const;
    Poly& operator+=(const Poly& o) { *this = *this + o; return *this; }
    Poly& operator-=(const Poly& o) { *this = *this - o; return *this; }
    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly pow(int n) const;

    // Formal partial derivative with respect to table variable v.
    Poly diff(int v) const;
    Poly diff(const std::string& name) const;

    // Exact composition. Bound variables map to polynomials over `target`;
    // unbound variables are carried across by name (same name must exist in
    // the target table).
    Poly substitute(const std::map<int, Poly>& bindings, const VarTablePtr& target) const;
    // Same-table convenience.
    Poly substitute(const std::map<int, Poly>& bindings) const;

    // Swaps conjugate-paired variables and conjugates coefficients.
    Poly conjugate() const;

    // Exact quotient f/g, or nullopt when g does not divide f.
    std::optional<Poly> divide_exact(const Poly& g) const;

    // (min, max) term weight; nullopt for the zero polynomial.
    std::optional<std::pair<int, int>> weight_interval() const;
    bool weight_homogeneous() const;
    // Terms of exactly the given weight.
    Poly weight_component(int w) const;

    // True when every coefficient is real and the polynomial equals its own
    // conjugate (a real-valued polynomial in z, conj(z) form).
    bool is_real_form() const;

    // Exact evaluation; `values` indexed by table variable, every variable
    // occurring in the polynomial must have a value.
    ExactScalar eval(const std::vector<std::optional<ExactScalar>>& values) const;
    std::complex<double> eval_complex(const std::vector<std::complex<double>>& values) const;

    // Canonical text: terms in descending graded-lex order.
    std::string str() const;

private:
    void check_same_table(const Poly& o) const;

    VarTablePtr table_;
    TermMap terms_;
};

Poly operator*(const ExactScalar& c, const Poly& f);

}  // namespace crmodel
