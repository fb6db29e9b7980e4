#pragma once

#include <optional>
#include <vector>

#include "crmodel/scalar.hpp"

namespace crmodel {

using Row = std::vector<ExactScalar>;

// Incremental exact row reduction over Q(i)[sqrt2]. Rows are kept in reduced
// echelon form so rank queries and nullspace extraction are immediate.
class RowReducer {
public:
    explicit RowReducer(int cols) : cols_(cols) {}

    // Reduces the row against the current basis and inserts the remainder.
    // Returns true when the rank increased.
    bool add_row(Row row);

    int cols() const { return cols_; }
    int rank() const { return static_cast<int>(rows_.size()); }
    const std::vector<Row>& rows() const { return rows_; }
    const std::vector<int>& pivots() const { return pivots_; }

    // Basis of {x : A x = 0} for the accumulated rows.
    std::vector<Row> nullspace() const;

private:
    int cols_;
    std::vector<Row> rows_;
    std::vector<int> pivots_;
};

int rank_of(const std::vector<Row>& rows, int cols);

// One exact solution of A x = b (free variables set to zero), or nullopt when
// the system is inconsistent.
std::optional<Row> solve_linear(const std::vector<Row>& a, const Row& b);

// Expresses v in the span of the given vectors, returning the coefficients.
std::optional<Row> express_in_span(const std::vector<Row>& span, const Row& v);

// Splits a complex-valued row into its real and imaginary parts (used to
// solve for real unknowns against complex-valued data).
std::pair<Row, Row> realify(const Row& row);

bool spans_equal(const std::vector<Row>& a, const std::vector<Row>& b, int cols);

}  // namespace crmodel
