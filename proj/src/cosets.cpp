#include "gkz/cosets.hpp"

#include <algorithm>

namespace gkz {

std::vector<QVec> face_degree_representatives(const GkzDatum& datum, int face_id, const QVec& beta) {
    IntMatrix span = datum.face_span_basis(face_id);
    auto meet = shifted_lattice_meet_subspace(beta, span);
    if (!meet) return {};
    const Lattice& zf = datum.face_lattice(face_id);
    const Lattice& zd_cf = datum.saturated_face_lattice(face_id);
    std::vector<QVec> reps;
    for (const QVec& rho : coset_representatives(zf, zd_cf))
        reps.push_back(meet->point + rho);
    return canonical_coset_list(std::move(reps), zf);
}

std::vector<QVec> canonical_coset_list(std::vector<QVec> reps, const Lattice& modulus) {
    for (auto& r : reps) r = reduce_mod_lattice(r, modulus);
    std::sort(reps.begin(), reps.end());
    reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
    return reps;
}

} // namespace gkz
