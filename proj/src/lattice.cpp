#include "gkz/lattice.hpp"

#include <algorithm>

namespace gkz {

bool Lattice::contains(const ZVec& v) const {
    if (is_zero(v)) return true;
    auto x = solve_integer(basis_, v);
    return x.has_value();
}

namespace {

// change-of-basis matrix X with sup.basis * X = sub.basis, integer entries
IntMatrix change_of_basis(const Lattice& sub, const Lattice& sup) {
    if (sub.ambient_dim() != sup.ambient_dim())
        throw RankMismatch("ambient dimension mismatch");
    if (sub.rank() != sup.rank())
        throw RankMismatch("lattice ranks differ");
    IntMatrix X(sup.rank(), sub.rank());
    for (int j = 0; j < sub.rank(); ++j) {
        auto col = solve_integer(sup.basis(), sub.basis().column(j));
        if (!col) throw NotSublattice("generator not contained in the larger lattice");
        for (int i = 0; i < sup.rank(); ++i) X.at(i, j) = (*col)[i];
    }
    return X;
}

} // namespace

Int lattice_index(const Lattice& sub, const Lattice& sup) {
    if (sub.rank() == 0 && sup.rank() == 0) return 1;
    IntMatrix X = change_of_basis(sub, sup);
    Int d = determinant(X);
    if (d == 0) throw RankMismatch("degenerate change of basis");
    return abs_int(d);
}

std::vector<QVec> coset_representatives(const Lattice& sub, const Lattice& sup) {
    int r = sup.rank();
    if (r == 0) return {QVec(sup.ambient_dim(), Rat(0))};
    IntMatrix X = change_of_basis(sub, sup);
    IntMatrix H = hermite_column_form(X);
    if (H.cols() != r) throw RankMismatch("degenerate change of basis");
    // pivot of column j sits in row j for a square full-rank column HNF
    ZVec box(r);
    for (int j = 0; j < r; ++j) box[j] = H.at(j, j);
    std::vector<QVec> reps;
    ZVec t(r, Int(0));
    while (true) {
        ZVec v = sup.basis().apply(t);
        reps.push_back(to_qvec(v));
        int k = r - 1;
        while (k >= 0) {
            if (++t[k] < box[k]) break;
            t[k] = 0;
            --k;
        }
        if (k < 0) break;
    }
    std::sort(reps.begin(), reps.end());
    return reps;
}

std::optional<ShiftedMeet> shifted_lattice_meet_subspace(const QVec& beta,
                                                         const IntMatrix& subspace_basis) {
    int d = int(beta.size());
    // rows cutting out the subspace: integer kernel of basis^T
    IntMatrix N = kernel_lattice(subspace_basis.transposed()).transposed();
    QVec c = N.apply(beta);
    if (!is_integral(c)) return std::nullopt;
    ZVec rhs(N.rows());
    for (int i = 0; i < N.rows(); ++i) rhs[i] = -to_int(c[i]);
    auto x = solve_integer(N, rhs);
    if (!x) return std::nullopt;
    ShiftedMeet out;
    out.point = beta + to_qvec(*x);
    out.solution_lattice = (N.rows() == 0) ? Lattice::full(d) : Lattice(kernel_lattice(N));
    return out;
}

QVec reduce_mod_lattice(const QVec& v, const Lattice& lat) {
    if (lat.rank() == 0) return v;
    auto coeffs = solve_rational(lat.basis(), v);
    if (!coeffs) throw Error("vector not in the span of the lattice");
    QVec out = v;
    for (int j = 0; j < lat.rank(); ++j) {
        Rat fl = Rat(floor_div(num((*coeffs)[j]), den((*coeffs)[j])));
        if (fl == 0) continue;
        for (int i = 0; i < lat.ambient_dim(); ++i)
            out[i] -= fl * Rat(lat.basis().at(i, j));
    }
    return out;
}

} // namespace gkz
