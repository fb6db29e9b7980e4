#include "crmodel/polymap.hpp"

#include <stdexcept>

namespace crmodel {

namespace {

void check_holomorphic(const Poly& f, const VarTablePtr& table, const char* what) {
    for (const auto& [e, c] : f.terms()) {
        (void)c;
        for (size_t k = 0; k < e.size(); ++k)
            if (e[k] > 0 && table->info(static_cast<int>(k)).kind == VarKind::Conjugate)
                throw std::invalid_argument(std::string(what) +
                                            ": image contains a conjugate variable");
    }
}

}  // namespace

PolyMap::PolyMap(VarTablePtr src, VarTablePtr dst, std::array<Poly, 3> fwd)
    : src_(std::move(src)), dst_(std::move(dst)), fwd_(std::move(fwd)) {
    if (src_->complex_vars().size() != 3 || dst_->complex_vars().size() != 3)
        throw std::invalid_argument("PolyMap: tables must carry 3 complex coordinates");
    for (const Poly& f : fwd_) {
        if (!f.table() || !f.table()->same_as(*src_))
            throw std::invalid_argument("PolyMap: forward image table mismatch");
        check_holomorphic(f, src_, "PolyMap");
    }
}

PolyMap::PolyMap(VarTablePtr src, VarTablePtr dst, std::array<Poly, 3> fwd,
                 std::array<Poly, 3> inv)
    : PolyMap(std::move(src), std::move(dst), std::move(fwd)) {
    for (const Poly& g : inv) {
        if (!g.table() || !g.table()->same_as(*dst_))
            throw std::invalid_argument("PolyMap: inverse image table mismatch");
        check_holomorphic(g, dst_, "PolyMap inverse");
    }
    inv_ = std::move(inv);
    verify_inverse();
}

const Poly& PolyMap::inverse(int j) const {
    if (!inv_) throw std::logic_error("PolyMap: no verified inverse");
    return inv_->at(j);
}

void PolyMap::verify_inverse() const {
    // F o G = id on the destination, G o F = id on the source.
    std::map<int, Poly> src_to_dst;
    for (int k = 0; k < 3; ++k) src_to_dst[src_->complex_vars()[k]] = (*inv_)[k];
    std::map<int, Poly> dst_to_src;
    for (int k = 0; k < 3; ++k) dst_to_src[dst_->complex_vars()[k]] = fwd_[k];
    for (int j = 0; j < 3; ++j) {
        Poly fg = fwd_[j].substitute(src_to_dst, dst_);
        if (fg != Poly::var(dst_, dst_->complex_vars()[j]))
            throw std::invalid_argument("PolyMap: forward o inverse is not the identity");
        Poly gf = (*inv_)[j].substitute(dst_to_src, src_);
        if (gf != Poly::var(src_, src_->complex_vars()[j]))
            throw std::invalid_argument("PolyMap: inverse o forward is not the identity");
    }
}

Poly PolyMap::pullback(const Poly& f) const {
    if (!f.table() || !f.table()->same_as(*dst_))
        throw std::invalid_argument("PolyMap::pullback: table mismatch");
    std::map<int, Poly> bind;
    for (int k = 0; k < 3; ++k) {
        int z = dst_->complex_vars()[k];
        bind[z] = fwd_[k];
        bind[dst_->conj_index(z)] = fwd_[k].conjugate();
    }
    return f.substitute(bind, src_);
}

HoloVField PolyMap::pushforward(const HoloVField& X) const {
    if (!inv_) throw std::invalid_argument("PolyMap::pushforward: unverified inverse");
    if (!X.table()->same_as(*src_))
        throw std::invalid_argument("PolyMap::pushforward: field table mismatch");
    std::map<int, Poly> src_to_dst;
    for (int k = 0; k < 3; ++k) src_to_dst[src_->complex_vars()[k]] = (*inv_)[k];
    std::array<Poly, 3> out;
    for (int j = 0; j < 3; ++j) out[j] = X.apply(fwd_[j]).substitute(src_to_dst, dst_);
    return HoloVField(dst_, std::move(out));
}

PolyMap PolyMap::compose(const PolyMap& outer, const PolyMap& inner) {
    if (!inner.dst_->same_as(*outer.src_))
        throw std::invalid_argument("PolyMap::compose: middle tables differ");
    std::map<int, Poly> mid_to_a;
    for (int k = 0; k < 3; ++k) mid_to_a[outer.src_->complex_vars()[k]] = inner.fwd_[k];
    std::array<Poly, 3> fwd;
    for (int j = 0; j < 3; ++j) fwd[j] = outer.fwd_[j].substitute(mid_to_a, inner.src_);
    if (inner.inv_ && outer.inv_) {
        std::map<int, Poly> mid_to_c;
        for (int k = 0; k < 3; ++k) mid_to_c[inner.dst_->complex_vars()[k]] = (*outer.inv_)[k];
        std::array<Poly, 3> inv;
        for (int j = 0; j < 3; ++j) inv[j] = (*inner.inv_)[j].substitute(mid_to_c, outer.dst_);
        return PolyMap(inner.src_, outer.dst_, std::move(fwd), std::move(inv));
    }
    return PolyMap(inner.src_, outer.dst_, std::move(fwd));
}

std::array<ExactScalar, 3> PolyMap::apply_point(const std::array<ExactScalar, 3>& p) const {
    std::vector<std::optional<ExactScalar>> values(src_->size());
    for (int k = 0; k < 3; ++k) {
        int z = src_->complex_vars()[k];
        values[z] = p[k];
        values[src_->conj_index(z)] = p[k].conj();
    }
    return {fwd_[0].eval(values), fwd_[1].eval(values), fwd_[2].eval(values)};
}

std::string PolyMap::str() const {
    std::string out;
    for (int j = 0; j < 3; ++j) {
        if (j) out += ", ";
        out += dst_->info(dst_->complex_vars()[j]).name + " = " + fwd_[j].str();
    }
    return out;
}

}  // namespace crmodel
