#include "crmodel/vfield.hpp"

#include <map>
#include <stdexcept>

namespace crmodel {

HoloVField::HoloVField(VarTablePtr table, std::array<Poly, 3> coeffs)
    : table_(std::move(table)), coeffs_(std::move(coeffs)) {
    if (table_->complex_vars().size() != 3)
        throw std::invalid_argument("HoloVField: table must carry exactly 3 complex coordinates");
    for (const Poly& c : coeffs_) {
        if (!c.table() || !c.table()->same_as(*table_))
            throw std::invalid_argument("HoloVField: coefficient table mismatch");
        for (const auto& [e, v] : c.terms()) {
            (void)v;
            for (size_t k = 0; k < e.size(); ++k)
                if (e[k] > 0 && table_->info(static_cast<int>(k)).kind == VarKind::Conjugate)
                    throw std::invalid_argument(
                        "HoloVField: coefficient contains conjugate variable '" +
                        table_->display_name(static_cast<int>(k)) + "'");
        }
    }
}

HoloVField HoloVField::zero(VarTablePtr table) {
    Poly z(table);
    return HoloVField(std::move(table), {z, z, z});
}

HoloVField HoloVField::deriv(VarTablePtr table, const std::string& var, const Poly& coeff) {
    int idx = table->index_of(var);
    const auto& cvars = table->complex_vars();
    std::array<Poly, 3> coeffs = {Poly(table), Poly(table), Poly(table)};
    for (size_t j = 0; j < cvars.size(); ++j)
        if (cvars[j] == idx) {
            coeffs[j] = coeff;
            return HoloVField(std::move(table), std::move(coeffs));
        }
    throw std::invalid_argument("HoloVField::deriv: '" + var + "' is not a complex coordinate");
}

bool HoloVField::is_zero() const {
    return coeffs_[0].is_zero() && coeffs_[1].is_zero() && coeffs_[2].is_zero();
}

HoloVField HoloVField::operator+(const HoloVField& o) const {
    return HoloVField(table_, {coeffs_[0] + o.coeffs_[0], coeffs_[1] + o.coeffs_[1],
                               coeffs_[2] + o.coeffs_[2]});
}

HoloVField HoloVField::operator-(const HoloVField& o) const {
    return HoloVField(table_, {coeffs_[0] - o.coeffs_[0], coeffs_[1] - o.coeffs_[1],
                               coeffs_[2] - o.coeffs_[2]});
}

HoloVField HoloVField::operator-() const {
    return HoloVField(table_, {-coeffs_[0], -coeffs_[1], -coeffs_[2]});
}

HoloVField HoloVField::operator*(const ExactScalar& c) const {
    return HoloVField(table_, {coeffs_[0] * c, coeffs_[1] * c, coeffs_[2] * c});
}

HoloVField operator*(const ExactScalar& c, const HoloVField& X) { return X * c; }

bool HoloVField::operator==(const HoloVField& o) const {
    return coeffs_[0] == o.coeffs_[0] && coeffs_[1] == o.coeffs_[1] && coeffs_[2] == o.coeffs_[2];
}

Poly HoloVField::apply(const Poly& f) const {
    Poly out(table_);
    for (int j = 0; j < 3; ++j) {
        if (coeffs_[j].is_zero()) continue;
        out += coeffs_[j] * f.diff(direction(j));
    }
    return out;
}

HoloVField HoloVField::bracket(const HoloVField& o) const {
    if (!table_->same_as(*o.table_))
        throw std::invalid_argument("bracket: variable table mismatch");
    std::array<Poly, 3> c;
    for (int j = 0; j < 3; ++j) c[j] = apply(o.coeffs_[j]) - o.apply(coeffs_[j]);
    return HoloVField(table_, std::move(c));
}

std::vector<std::pair<int, HoloVField>> HoloVField::graded_decompose() const {
    std::map<int, std::array<Poly, 3>> parts;
    for (int j = 0; j < 3; ++j) {
        int dw = -table_->info(direction(j)).weight;
        for (const auto& [e, c] : coeffs_[j].terms()) {
            int w = dw;
            for (size_t v = 0; v < e.size(); ++v)
                w += e[v] * table_->info(static_cast<int>(v)).weight;
            auto it = parts.find(w);
            if (it == parts.end())
                it = parts.emplace(w, std::array<Poly, 3>{Poly(table_), Poly(table_), Poly(table_)})
                         .first;
            it->second[j].add_term(e, c);
        }
    }
    std::vector<std::pair<int, HoloVField>> out;
    for (auto& [w, c] : parts) out.emplace_back(w, HoloVField(table_, std::move(c)));
    return out;
}

HoloVField HoloVField::weight_component(int k) const {
    std::array<Poly, 3> c;
    for (int j = 0; j < 3; ++j) {
        int dw = -table_->info(direction(j)).weight;
        c[j] = coeffs_[j].weight_component(k - dw);
    }
    return HoloVField(table_, std::move(c));
}

bool HoloVField::weight_homogeneous() const { return graded_decompose().size() <= 1; }

std::array<std::complex<double>, 3> HoloVField::eval_complex(
    const std::vector<std::complex<double>>& values) const {
    return {coeffs_[0].eval_complex(values), coeffs_[1].eval_complex(values),
            coeffs_[2].eval_complex(values)};
}

std::array<ExactScalar, 3> HoloVField::eval(
    const std::vector<std::optional<ExactScalar>>& values) const {
    return {coeffs_[0].eval(values), coeffs_[1].eval(values), coeffs_[2].eval(values)};
}

std::string HoloVField::str() const {
    if (is_zero()) return "0";
    std::string out;
    for (int j = 0; j < 3; ++j) {
        if (coeffs_[j].is_zero()) continue;
        std::string dname = "d/d" + table_->info(direction(j)).name;
        std::string cs = coeffs_[j].str();
        std::string term;
        if (cs == "1") term = dname;
        else if (cs == "-1") term = "-" + dname;
        else if (cs.find(' ') != std::string::npos || coeffs_[j].num_terms() > 1)
            term = "(" + cs + ")*" + dname;
        else term = cs + "*" + dname;
        if (out.empty()) out = term;
        else if (term[0] == '-') out += " - " + term.substr(1);
        else out += " + " + term;
    }
    return out;
}

std::vector<Row> field_vectors(const std::vector<HoloVField>& fields) {
    // Column universe: (coordinate, monomial) pairs, each split into re/im.
    std::map<std::pair<int, Expvec>, int> index;
    for (const HoloVField& X : fields)
        for (int j = 0; j < 3; ++j)
            for (const auto& [e, c] : X.coeff(j).terms()) {
                (void)c;
                index.emplace(std::make_pair(j, e), 0);
            }
    int n = 0;
    for (auto& [key, idx] : index) idx = n++;
    std::vector<Row> rows;
    rows.reserve(fields.size());
    for (const HoloVField& X : fields) {
        Row row(2 * n, ExactScalar::zero());
        for (int j = 0; j < 3; ++j)
            for (const auto& [e, c] : X.coeff(j).terms()) {
                int idx = index.at(std::make_pair(j, e));
                row[2 * idx] = ExactScalar(c.re());
                row[2 * idx + 1] = ExactScalar(c.im());
            }
        rows.push_back(std::move(row));
    }
    return rows;
}

bool fields_independent(const std::vector<HoloVField>& fields) {
    auto rows = field_vectors(fields);
    int cols = rows.empty() ? 0 : static_cast<int>(rows[0].size());
    return rank_of(rows, cols) == static_cast<int>(fields.size());
}

std::optional<Row> field_in_real_span(const HoloVField& X, const std::vector<HoloVField>& span) {
    std::vector<HoloVField> all = span;
    all.push_back(X);
    auto rows = field_vectors(all);
    Row target = rows.back();
    rows.pop_back();
    return express_in_span(rows, target);
}

bool field_spans_equal(const std::vector<HoloVField>& a, const std::vector<HoloVField>& b) {
    std::vector<HoloVField> all = a;
    all.insert(all.end(), b.begin(), b.end());
    auto rows = field_vectors(all);
    int cols = rows.empty() ? 0 : static_cast<int>(rows[0].size());
    std::vector<Row> ra(rows.begin(), rows.begin() + a.size());
    std::vector<Row> rb(rows.begin() + a.size(), rows.end());
    return spans_equal(ra, rb, cols);
}

}  // namespace crmodel
