#include "crmodel/vartable.hpp"

#include <stdexcept>

namespace crmodel {

VarTablePtr VarTable::make(std::vector<VarInfo> vars) {
    auto table = std::shared_ptr<VarTable>(new VarTable());
    table->vars_ = std::move(vars);
    int n = static_cast<int>(table->vars_.size());
    for (int i = 0; i < n; ++i) {
        VarInfo& v = table->vars_[i];
        if (v.name.empty()) throw std::invalid_argument("VarTable: empty variable name");
        if (v.kind == VarKind::Real || (v.kind == VarKind::Param && v.conj < 0))
            v.conj = i;
        if (v.kind == VarKind::Conjugate) continue;  // indexed under the partner's name
        if (!table->index_.emplace(v.name, i).second)
            throw std::invalid_argument("VarTable: duplicate variable name '" + v.name + "'");
    }
    for (int i = 0; i < n; ++i) {
        const VarInfo& v = table->vars_[i];
        if (v.kind == VarKind::Complex || v.kind == VarKind::Conjugate) {
            if (v.conj < 0 || v.conj >= n)
                throw std::invalid_argument("VarTable: unpaired variable '" + v.name + "'");
            const VarInfo& w = table->vars_[v.conj];
            if (w.conj != i || w.weight != v.weight)
                throw std::invalid_argument("VarTable: bad conjugate pairing for '" + v.name + "'");
            if ((v.kind == VarKind::Complex) == (w.kind == VarKind::Complex))
                throw std::invalid_argument("VarTable: pairing must join Complex with Conjugate");
        }
        if (v.kind == VarKind::Param && v.conj != i) {
            const VarInfo& w = table->vars_[v.conj];
            if (w.kind != VarKind::Param || w.conj != i)
                throw std::invalid_argument("VarTable: bad parameter pairing for '" + v.name + "'");
        }
        if (v.kind == VarKind::Complex) table->complex_.push_back(i);
    }
    return table;
}

int VarTable::find(const std::string& name) const {
    auto it = index_.find(name);
    return it == index_.end() ? -1 : it->second;
}

int VarTable::index_of(const std::string& name) const {
    int i = find(name);
    if (i < 0) throw std::invalid_argument("VarTable: unknown variable '" + name + "'");
    return i;
}

std::string VarTable::display_name(int i) const {
    const VarInfo& v = vars_.at(i);
    if (v.kind == VarKind::Conjugate) return "conj(" + vars_.at(v.conj).name + ")";
    return v.name;
}

bool VarTable::same_as(const VarTable& other) const {
    if (this == &other) return true;
    if (vars_.size() != other.vars_.size()) return false;
    for (size_t i = 0; i < vars_.size(); ++i) {
        const VarInfo& a = vars_[i];
        const VarInfo& b = other.vars_[i];
        if (a.name != b.name || a.kind != b.kind || a.weight != b.weight || a.conj != b.conj)
            return false;
    }
    return true;
}

}  // namespace crmodel
