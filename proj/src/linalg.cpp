#include "crmodel/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace crmodel {

bool RowReducer::add_row(Row row) {
    if (static_cast<int>(row.size()) != cols_)
        throw std::invalid_argument("RowReducer: row length mismatch");
    // Eliminate against existing pivots.
    for (size_t r = 0; r < rows_.size(); ++r) {
        const ExactScalar& c = row[pivots_[r]];
        if (c.is_zero()) continue;
        ExactScalar f = c;  // pivot entries are normalized to 1
        for (int j = 0; j < cols_; ++j)
            if (!rows_[r][j].is_zero()) row[j] -= f * rows_[r][j];
    }
    int pivot = -1;
    for (int j = 0; j < cols_; ++j)
        if (!row[j].is_zero()) { pivot = j; break; }
    if (pivot < 0) return false;
    ExactScalar inv = row[pivot].inverse();
    for (int j = pivot; j < cols_; ++j)
        if (!row[j].is_zero()) row[j] *= inv;
    // Back-eliminate the new pivot column from the existing rows.
    for (size_t r = 0; r < rows_.size(); ++r) {
        const ExactScalar& c = rows_[r][pivot];
        if (c.is_zero()) continue;
        ExactScalar f = c;
        for (int j = 0; j < cols_; ++j)
            if (!row[j].is_zero()) rows_[r][j] -= f * row[j];
    }
    // Insert keeping pivot columns sorted.
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), pivot);
    size_t idx = pos - pivots_.begin();
    pivots_.insert(pos, pivot);
    rows_.insert(rows_.begin() + idx, std::move(row));
    return true;
}

std::vector<Row> RowReducer::nullspace() const {
    std::vector<bool> is_pivot(cols_, false);
    for (int p : pivots_) is_pivot[p] = true;
    std::vector<Row> basis;
    for (int f = 0; f < cols_; ++f) {
        if (is_pivot[f]) continue;
        Row x(cols_, ExactScalar::zero());
        x[f] = ExactScalar::one();
        for (size_t r = 0; r < rows_.size(); ++r) x[pivots_[r]] = -rows_[r][f];
        basis.push_back(std::move(x));
    }
    return basis;
}

int rank_of(const std::vector<Row>& rows, int cols) {
    RowReducer red(cols);
    for (const Row& r : rows) red.add_row(r);
    return red.rank();
}

std::optional<Row> solve_linear(const std::vector<Row>& a, const Row& b) {
    if (a.size() != b.size()) throw std::invalid_argument("solve_linear: size mismatch");
    int cols = a.empty() ? 0 : static_cast<int>(a[0].size());
    RowReducer red(cols + 1);
    for (size_t r = 0; r < a.size(); ++r) {
        Row aug = a[r];
        aug.push_back(b[r]);
        red.add_row(std::move(aug));
    }
    for (int p : red.pivots())
        if (p == cols) return std::nullopt;  // 0 = 1 row: inconsistent
    Row x(cols, ExactScalar::zero());
    const auto& rows = red.rows();
    const auto& pivots = red.pivots();
    for (size_t r = 0; r < rows.size(); ++r) x[pivots[r]] = rows[r][cols];
    return x;
}

std::optional<Row> express_in_span(const std::vector<Row>& span, const Row& v) {
    // Columns of the system are the span vectors.
    size_t dim = v.size();
    std::vector<Row> a(dim, Row(span.size(), ExactScalar::zero()));
    for (size_t k = 0; k < span.size(); ++k) {
        if (span[k].size() != dim) throw std::invalid_argument("express_in_span: size mismatch");
        for (size_t r = 0; r < dim; ++r) a[r][k] = span[k][r];
    }
    return solve_linear(a, v);
}

std::pair<Row, Row> realify(const Row& row) {
    Row re, im;
    re.reserve(row.size());
    im.reserve(row.size());
    for (const ExactScalar& c : row) {
        re.emplace_back(c.re());
        im.emplace_back(c.im());
    }
    return {std::move(re), std::move(im)};
}

bool spans_equal(const std::vector<Row>& a, const std::vector<Row>& b, int cols) {
    RowReducer ra(cols), rb(cols), rab(cols);
    for (const Row& r : a) { ra.add_row(r); rab.add_row(r); }
    for (const Row& r : b) { rb.add_row(r); rab.add_row(r); }
    return ra.rank() == rb.rank() && rb.rank() == rab.rank();
}

}  // namespace crmodel
