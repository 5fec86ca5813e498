#pragma once

#include "gkz/cosets.hpp"
#include "gkz/ishida.hpp"

namespace gkz {

// E_F(beta): classes lambda in CF/ZF with beta - lambda a degree of N A - N F.
CosetSet ef_set(const MembershipOracle& oracle, int face_id, const QVec& beta, SearchBudget& budget);

struct OrbitSupport {
    std::vector<int> faces;  // sorted face ids

    bool contains(int id) const { return std::binary_search(faces.begin(), faces.end(), id); }
    bool operator==(const OrbitSupport& o) const { return faces == o.faces; }
    bool operator<(const OrbitSupport& o) const { return faces < o.faces; }
};

// faces with nonempty E*_F(beta) respectively E_F(beta)
OrbitSupport fiber_support(const LocalCohomology& lc, const QVec& beta, SearchBudget& budget);
OrbitSupport cofiber_support(const MembershipOracle& oracle, const QVec& beta, SearchBudget& budget);

struct OpenSetDescription {
    std::vector<int> excluded_maximal_faces;
    std::vector<std::string> ideal_descriptions;  // generators of I_F^A per excluded face
    std::string rendering;                        // e.g. "(C*)^3" or "C^3-hat minus {d3-axis}"
};

// Open subset U with U meet X_A equal to the union of the orbits in the
// support. Requires the complement within the face poset to be downward
// closed; throws NotClosedComplement otherwise.
OpenSetDescription open_set_description(const GkzDatum& datum, const OrbitSupport& support);

std::string render_support(const GkzDatum& datum, const OrbitSupport& support);

} // namespace gkz
