#pragma once

#include "gkz/cosets.hpp"
#include "gkz/membership.hpp"

#include <map>

namespace gkz {

// The complex of face-localizations of S_A[d^-F], one node per face above F at
// cohomological position rank(node) - rank(F), with orientation signs on the
// localization maps. Built once per (datum, F); the differential squares to
// zero by construction and this is checked at build time.
struct IshidaComplex {
    int base_face = -1;
    int length = 0;                           // top cohomological position
    std::vector<int> nodes;                   // face ids, ascending
    std::vector<int> position;                // per node
    std::map<std::pair<int, int>, int> sign;  // (node idx, node idx) -> +-1 for adjacent pairs
};

IshidaComplex build_ishida(const GkzDatum& datum, int face_id);

// Cohomology dimensions of the degree-alpha slice.
struct GradedLCProfile {
    ZVec degree;
    std::vector<int> dims;  // h^0 .. h^length

    bool all_zero() const {
        for (int h : dims) if (h != 0) return false;
        return true;
    }
    bool nonzero_below_top() const {
        for (size_t i = 0; i + 1 < dims.size(); ++i) if (dims[i] != 0) return true;
        return false;
    }
};

class LocalCohomology {
public:
    explicit LocalCohomology(std::shared_ptr<MembershipOracle> oracle);

    const GkzDatum& datum() const { return oracle_->datum(); }
    const MembershipOracle& oracle() const { return *oracle_; }
    const IshidaComplex& complex_for(int face_id) const;

    GradedLCProfile graded_dims(int face_id, const ZVec& alpha, SearchBudget& budget) const;

    // E*_F(beta): classes lambda with nonvanishing local cohomology at beta - lambda
    CosetSet estar_set(int face_id, const QVec& beta, SearchBudget& budget) const;

    // some h^i with i < d_{A/F} is nonzero at a representative degree
    bool strongly_exceptional_contains(int face_id, const QVec& beta, SearchBudget& budget) const;

    // union over all faces
    bool exceptional_contains(const QVec& beta, SearchBudget& budget) const;

private:
    std::shared_ptr<MembershipOracle> oracle_;
    std::vector<IshidaComplex> complexes_;
};

} // namespace gkz
