#pragma once

#include <string>
#include <vector>

namespace crmodel::suites {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string witness;  // exact witness for failures, short note for passes
};

struct SuiteReport {
    std::string name;
    std::vector<CheckResult> checks;
    bool all_pass() const;
    std::string str() const;
};

// Fine-grained batteries; each maps onto one acceptance criterion.
std::vector<CheckResult> checks_brackets();            // closure + Jacobi + structure match
std::vector<CheckResult> checks_invariants();          // P, Q relative invariance
std::vector<CheckResult> checks_tangency();            // algebra/orbit tangency, formal params
std::vector<CheckResult> checks_map6();                // tube basis onto ambient basis
std::vector<CheckResult> checks_equivalence_maps();    // coordinate equivalences
std::vector<CheckResult> checks_quartic_identity();    // degree-4 form of the nu = 4 orbit
std::vector<CheckResult> checks_group_preservation();  // one-parameter families fix their orbits
std::vector<CheckResult> checks_stabilizer_dims();     // graded dimensions
std::vector<CheckResult> checks_degeneracy();          // holomorphic degeneracy bounds
std::vector<CheckResult> checks_levi_signatures();     // exact signatures at sample points
std::vector<CheckResult> checks_levi_transport();      // signature constant along the group
std::vector<CheckResult> checks_rank_dichotomy();      // rank 4 on the cubic, 5 outside
std::vector<CheckResult> checks_flow_conservation();   // orbit invariant under the flows

// name in {brackets, invariants, tangency, equivalences, levi, stabilizers, flows}
SuiteReport run_suite(const std::string& name);
const std::vector<std::string>& suite_names();

}  // namespace crmodel::suites
