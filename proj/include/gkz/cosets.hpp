#pragma once

#include "gkz/datum.hpp"
#include "gkz/lattice.hpp"

namespace gkz {

// The finite family of lambda in (beta + Z^d) meeting the span of a face,
// one representative per class mod ZF, reduced into the fundamental domain of
// ZF and sorted. Empty when (beta + Z^d) misses the span.
std::vector<QVec> face_degree_representatives(const GkzDatum& datum, int face_id, const QVec& beta);

// E_F(beta)-style subset of the representatives above.
struct CosetSet {
    int face_id = -1;
    std::vector<QVec> representatives;  // sorted, canonical mod ZF
    Lattice modulus;                    // ZF

    bool empty() const { return representatives.empty(); }
    size_t size() const { return representatives.size(); }
    bool operator==(const CosetSet& o) const {
        return face_id == o.face_id && representatives == o.representatives;
    }
};

// Canonicalize a set of coset representatives (reduce mod the lattice, sort).
std::vector<QVec> canonical_coset_list(std::vector<QVec> reps, const Lattice& modulus);

} // namespace gkz
