#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace crmodel {

enum class VarKind { Complex, Conjugate, Real, Param };

struct VarInfo {
    std::string name;
    VarKind kind = VarKind::Real;
    int weight = 0;
    // Index of the conjugate partner: the paired variable for
    // Complex/Conjugate (and for paired formal parameters), self otherwise.
    int conj = -1;
};

class VarTable;
using VarTablePtr = std::shared_ptr<const VarTable>;

// Immutable ordered variable universe. Conjugate variables always pair with
// exactly one complex variable and share its weight.
class VarTable {
public:
    static VarTablePtr make(std::vector<VarInfo> vars);

    size_t size() const { return vars_.size(); }
    const VarInfo& info(int i) const { return vars_.at(i); }
    const std::vector<VarInfo>& vars() const { return vars_; }

    // Index of the variable with the given name, or -1.
    int find(const std::string& name) const;
    int index_of(const std::string& name) const;  // throws on unknown name

    int conj_index(int i) const { return vars_.at(i).conj; }
    // Indices of the Complex-kind variables, in table order.
    const std::vector<int>& complex_vars() const { return complex_; }

    // Display name: conjugate variables print as conj(<partner>).
    std::string display_name(int i) const;

    bool same_as(const VarTable& other) const;

private:
    VarTable() = default;
    std::vector<VarInfo> vars_;
    std::map<std::string, int> index_;
    std::vector<int> complex_;
};

}  // namespace crmodel
