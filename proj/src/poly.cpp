#include "crmodel/poly.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace crmodel {

bool GrlexLess::operator()(const Expvec& a, const Expvec& b) const {
    int da = std::accumulate(a.begin(), a.end(), 0);
    int db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db) return da < db;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

Poly Poly::constant(VarTablePtr table, const ExactScalar& c) {
    Poly f(std::move(table));
    if (!c.is_zero()) f.terms_.emplace(Expvec(f.table_->size(), 0), c);
    return f;
}

Poly Poly::var(VarTablePtr table, int index) {
    if (index < 0 || static_cast<size_t>(index) >= table->size())
        throw std::invalid_argument("Poly::var: index out of range");
    Poly f(std::move(table));
    Expvec e(f.table_->size(), 0);
    e[index] = 1;
    f.terms_.emplace(std::move(e), ExactScalar::one());
    return f;
}

Poly Poly::var(VarTablePtr table, const std::string& name) {
    int idx = table->index_of(name);
    return var(std::move(table), idx);
}

Poly Poly::monomial(VarTablePtr table, Expvec exps, const ExactScalar& c) {
    if (exps.size() != table->size())
        throw std::invalid_argument("Poly::monomial: exponent vector length mismatch");
    Poly f(std::move(table));
    if (!c.is_zero()) f.terms_.emplace(std::move(exps), c);
    return f;
}

int Poly::total_degree() const {
    if (terms_.empty()) return -1;
    const Expvec& lead = terms_.rbegin()->first;
    return std::accumulate(lead.begin(), lead.end(), 0);
}

ExactScalar Poly::coeff(const Expvec& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? ExactScalar::zero() : it->second;
}

void Poly::add_term(const Expvec& e, const ExactScalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void Poly::check_same_table(const Poly& o) const {
    if (!table_ || !o.table_ || !table_->same_as(*o.table_))
        throw std::invalid_argument("Poly: variable table mismatch");
}

Poly Poly::operator-() const {
    Poly out(table_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

Poly Poly::operator+(const Poly& o) const {
    check_same_table(o);
    Poly out = *this;
    for (const auto& [e, c] : o.terms_) out.add_term(e, c);
    return out;
}

Poly Poly::operator-(const Poly& o) const {
    check_same_table(o);
    Poly out = *this;
    for (const auto& [e, c] : o.terms_) out.add_term(e, -c);
    return out;
}

Poly Poly::operator*(const Poly& o) const {
    check_same_table(o);
    Poly out(table_);
    Expvec e(table_->size());
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            for (size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

Poly Poly::operator*(const ExactScalar& c) const {
    Poly out(table_);
    if (c.is_zero()) return out;
    for (const auto& [e, t] : terms_) out.terms_.emplace(e, t * c);
    return out;
}

Poly operator*(const ExactScalar& c, const Poly& f) { return f * c; }

bool Poly::operator==(const Poly& o) const {
    check_same_table(o);
    return terms_ == o.terms_;
}

Poly Poly::pow(int n) const {
    if (n < 0) throw std::invalid_argument("Poly::pow: negative exponent");
    Poly acc = Poly::constant(table_, ExactScalar::one());
    for (int k = 0; k < n; ++k) acc = acc * *this;
    return acc;
}

Poly Poly::diff(int v) const {
    if (v < 0 || static_cast<size_t>(v) >= table_->size())
        throw std::invalid_argument("Poly::diff: unknown variable");
    Poly out(table_);
    for (const auto& [e, c] : terms_) {
        if (e[v] == 0) continue;
        Expvec d = e;
        d[v] -= 1;
        out.add_term(d, ExactScalar(Quad(ratio(e[v]))) * c);
    }
    return out;
}

Poly Poly::diff(const std::string& name) const { return diff(table_->index_of(name)); }

Poly Poly::substitute(const std::map<int, Poly>& bindings, const VarTablePtr& target) const {
    // Resolve the image of every variable that actually occurs.
    size_t n = table_->size();
    std::vector<std::optional<Poly>> image(n);
    for (const auto& [v, img] : bindings) {
        if (v < 0 || static_cast<size_t>(v) >= n)
            throw std::invalid_argument("Poly::substitute: bound variable out of range");
        if (!img.table() || !img.table()->same_as(*target))
            throw std::invalid_argument("Poly::substitute: image table mismatch");
        image[v] = img;
    }
    auto carried = [&](int v) -> Poly {
        const VarInfo& info = table_->info(v);
        if (info.kind == VarKind::Conjugate) {
            int partner = target->find(table_->info(info.conj).name);
            if (partner < 0 || target->conj_index(partner) == partner)
                throw std::invalid_argument(
                    "Poly::substitute: no conjugate for '" + table_->display_name(v) +
                    "' in target table");
            return Poly::var(target, target->conj_index(partner));
        }
        int idx = target->find(info.name);
        if (idx < 0)
            throw std::invalid_argument("Poly::substitute: variable '" + info.name +
                                        "' missing from target table");
        return Poly::var(target, idx);
    };

    std::map<std::pair<int, int>, Poly> power_cache;
    auto power_of = [&](int v, int e) -> const Poly& {
        auto key = std::make_pair(v, e);
        auto it = power_cache.find(key);
        if (it != power_cache.end()) return it->second;
        if (!image[v]) image[v] = carried(v);
        return power_cache.emplace(key, image[v]->pow(e)).first->second;
    };

    Poly out(target);
    for (const auto& [e, c] : terms_) {
        Poly term = Poly::constant(target, c);
        for (size_t v = 0; v < n; ++v)
            if (e[v] > 0) term = term * power_of(static_cast<int>(v), e[v]);
        out += term;
    }
    return out;
}

Poly Poly::substitute(const std::map<int, Poly>& bindings) const {
    return substitute(bindings, table_);
}

Poly Poly::conjugate() const {
    Poly out(table_);
    size_t n = table_->size();
    Expvec d(n);
    for (const auto& [e, c] : terms_) {
        std::fill(d.begin(), d.end(), 0);
        for (size_t v = 0; v < n; ++v)
            if (e[v] > 0) d[table_->conj_index(static_cast<int>(v))] += e[v];
        out.add_term(d, c.conj());
    }
    return out;
}

std::optional<Poly> Poly::divide_exact(const Poly& g) const {
    check_same_table(g);
    if (g.is_zero()) throw std::invalid_argument("Poly::divide_exact: zero divisor");
    Poly q(table_);
    Poly r = *this;
    const auto& glead = *g.terms_.rbegin();
    while (!r.is_zero()) {
        const auto& rlead = *r.terms_.rbegin();
        Expvec t(table_->size());
        for (size_t k = 0; k < t.size(); ++k) {
            t[k] = rlead.first[k] - glead.first[k];
            if (t[k] < 0) return std::nullopt;
        }
        ExactScalar c = rlead.second / glead.second;
        Poly mono = Poly::monomial(table_, t, c);
        q += mono;
        r -= mono * g;
    }
    return q;
}

std::optional<std::pair<int, int>> Poly::weight_interval() const {
    if (terms_.empty()) return std::nullopt;
    int lo = 0, hi = 0;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        (void)c;
        int w = 0;
        for (size_t v = 0; v < e.size(); ++v) w += e[v] * table_->info(static_cast<int>(v)).weight;
        if (first) { lo = hi = w; first = false; }
        else { lo = std::min(lo, w); hi = std::max(hi, w); }
    }
    return std::make_pair(lo, hi);
}

bool Poly::weight_homogeneous() const {
    auto iv = weight_interval();
    return !iv || iv->first == iv->second;
}

Poly Poly::weight_component(int w) const {
    Poly out(table_);
    for (const auto& [e, c] : terms_) {
        int tw = 0;
        for (size_t v = 0; v < e.size(); ++v) tw += e[v] * table_->info(static_cast<int>(v)).weight;
        if (tw == w) out.terms_.emplace(e, c);
    }
    return out;
}

bool Poly::is_real_form() const { return conjugate() == *this; }

ExactScalar Poly::eval(const std::vector<std::optional<ExactScalar>>& values) const {
    ExactScalar acc;
    for (const auto& [e, c] : terms_) {
        ExactScalar term = c;
        for (size_t v = 0; v < e.size(); ++v) {
            if (e[v] == 0) continue;
            if (!values[v])
                throw std::invalid_argument("Poly::eval: no value for '" +
                                            table_->display_name(static_cast<int>(v)) + "'");
            for (int k = 0; k < e[v]; ++k) term *= *values[v];
        }
        acc += term;
    }
    return acc;
}

std::complex<double> Poly::eval_complex(const std::vector<std::complex<double>>& values) const {
    std::complex<double> acc = 0.0;
    for (const auto& [e, c] : terms_) {
        std::complex<double> term = c.to_complex();
        for (size_t v = 0; v < e.size(); ++v)
            for (int k = 0; k < e[v]; ++k) term *= values[v];
        acc += term;
    }
    return acc;
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const Expvec& e = it->first;
        const ExactScalar& c = it->second;
        std::string mono;
        for (size_t v = 0; v < e.size(); ++v) {
            if (e[v] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += table_->display_name(static_cast<int>(v));
            if (e[v] > 1) mono += "^" + std::to_string(e[v]);
        }
        std::string term;
        if (mono.empty()) {
            std::string cs = c.str();
            term = cs.find(' ') != std::string::npos ? "(" + cs + ")" : cs;
        } else if (c.is_one()) {
            term = mono;
        } else if ((-c).is_one()) {
            term = "-" + mono;
        } else {
            std::string cs = c.str();
            if (cs.find(' ') != std::string::npos) term = "(" + cs + ")*" + mono;
            else term = cs + "*" + mono;
        }
        if (out.empty()) out = term;
        else if (term[0] == '-') out += " - " + term.substr(1);
        else out += " + " + term;
    }
    return out;
}

}  // namespace crmodel
