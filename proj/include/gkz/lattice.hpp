#pragma once

#include "gkz/errors.hpp"
#include "gkz/matrix.hpp"

#include <optional>

namespace gkz {

// Full-rank-in-its-span sublattice of Z^d. The basis is stored in column Hermite
// normal form, so equal lattices compare equal structurally.
class Lattice {
public:
    Lattice() : ambient_(0) {}
    explicit Lattice(const IntMatrix& generators)
        : ambient_(generators.rows()), basis_(hermite_column_form(generators)) {}
    static Lattice zero(int ambient) { return Lattice(IntMatrix(ambient, 0)); }
    static Lattice full(int ambient) { return Lattice(IntMatrix::identity(ambient)); }

    int ambient_dim() const { return ambient_; }
    int rank() const { return basis_.cols(); }
    const IntMatrix& basis() const { return basis_; }

    bool contains(const ZVec& v) const;
    bool operator==(const Lattice& o) const { return ambient_ == o.ambient_ && basis_ == o.basis_; }

private:
    int ambient_;
    IntMatrix basis_;
};

// [sup : sub]; throws NotSublattice / RankMismatch.
Int lattice_index(const Lattice& sub, const Lattice& sup);

// Exactly [sup:sub] vectors, pairwise non-congruent mod sub, each in the
// Hermite-box fundamental domain, in lexicographic order.
std::vector<QVec> coset_representatives(const Lattice& sub, const Lattice& sup);

struct ShiftedMeet {
    QVec point;               // one element of (beta + Z^d) in the subspace
    Lattice solution_lattice; // Z^d intersected with the subspace
};

// Decide whether (beta + Z^d) meets the rational column span of subspace_basis;
// the full solution set is point + solution_lattice.
std::optional<ShiftedMeet> shifted_lattice_meet_subspace(const QVec& beta,
                                                         const IntMatrix& subspace_basis);

// Reduce v (lying in the span of lat) modulo lat into the half-open fundamental
// parallelepiped of the basis; identity when lat has rank 0.
QVec reduce_mod_lattice(const QVec& v, const Lattice& lat);

} // namespace gkz
