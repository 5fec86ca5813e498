#include "oracles.hpp"

#include <algorithm>
#include <bit>

namespace gkz::testing {

namespace {

// reachability pruning: the remaining columns with multiplicities <= bound can
// move each coordinate by at most bound * (suffix sum of absolute values)
bool brute_rec(const std::vector<ZVec>& cols, const std::vector<ZVec>& suffix_abs, ZVec target,
               size_t pos, long bound) {
    if (is_zero(target)) return true;
    if (pos == cols.size()) return false;
    for (size_t i = 0; i < target.size(); ++i)
        if (abs_int(target[i]) > Int(bound) * suffix_abs[pos][i]) return false;
    for (long k = 0; k <= bound; ++k) {
        if (brute_rec(cols, suffix_abs, target, pos + 1, bound)) return true;
        target = target - cols[pos];
    }
    return false;
}

} // namespace

bool brute_force_span(const IntMatrix& gens, const ZVec& alpha, long bound) {
    std::vector<ZVec> cols = gens.columns();
    std::vector<ZVec> suffix(cols.size() + 1, ZVec(gens.rows(), Int(0)));
    for (size_t p = cols.size(); p-- > 0;) {
        suffix[p] = suffix[p + 1];
        for (int i = 0; i < gens.rows(); ++i) suffix[p][i] += abs_int(cols[p][i]);
    }
    return brute_rec(cols, suffix, alpha, 0, bound);
}

bool brute_force_minus_span(const IntMatrix& gens, const std::vector<int>& sub, const ZVec& alpha,
                            long bound) {
    std::vector<ZVec> cols = gens.columns();
    for (int j : sub) cols.push_back(negate(gens.column(j)));
    return brute_force_span(IntMatrix::from_columns(cols, gens.rows()), alpha, bound);
}

std::vector<int> cech_dims(const MembershipOracle& oracle, int face_id, const ZVec& alpha,
                           SearchBudget& budget) {
    const GkzDatum& dat = oracle.datum();
    const Face& f = dat.face(face_id);
    std::vector<int> off;
    for (int j = 0; j < dat.ncols(); ++j)
        if (!std::binary_search(f.indices.begin(), f.indices.end(), j)) off.push_back(j);
    int m = int(off.size());

    // membership per inverted subset, via the quotient decision on F union S
    std::vector<char> populated(size_t(1) << m, 0);
    std::map<std::vector<int>, std::unique_ptr<QuotientMonoid>> cache;
    for (size_t mask = 0; mask < populated.size(); ++mask) {
        std::vector<int> cols = f.indices;
        for (int b = 0; b < m; ++b)
            if (mask & (size_t(1) << b)) cols.push_back(off[b]);
        std::sort(cols.begin(), cols.end());
        auto it = cache.find(cols);
        if (it == cache.end())
            it = cache.emplace(cols, std::make_unique<QuotientMonoid>(dat.matrix(), cols)).first;
        populated[mask] = it->second->contains(alpha, budget) ? 1 : 0;
    }

    // ranks of the degree-alpha differentials, one per cohomological position
    std::vector<int> dims(m + 1, 0);
    std::vector<int> count(m + 1, 0);
    for (size_t mask = 0; mask < populated.size(); ++mask)
        if (populated[mask]) ++count[std::popcount(mask)];

    std::vector<int> rank(m + 1, 0);
    for (int p = 0; p < m; ++p) {
        std::vector<size_t> src, dst;
        for (size_t mask = 0; mask < populated.size(); ++mask) {
            if (!populated[mask]) continue;
            if (std::popcount(mask) == p) src.push_back(mask);
            if (std::popcount(mask) == p + 1) dst.push_back(mask);
        }
        if (src.empty() || dst.empty()) continue;
        IntMatrix M(int(dst.size()), int(src.size()));
        for (size_t r = 0; r < dst.size(); ++r)
            for (size_t c = 0; c < src.size(); ++c) {
                size_t diff = dst[r] ^ src[c];
                if ((dst[r] & src[c]) != src[c] || std::popcount(diff) != 1) continue;
                int added = std::countr_zero(diff);
                int below = std::popcount(src[c] & ((size_t(1) << added) - 1));
                M.at(int(r), int(c)) = (below % 2 == 0) ? 1 : -1;
            }
        rank[p] = rank_of(M);
    }
    for (int p = 0; p <= m; ++p)
        dims[p] = count[p] - rank[p] - (p > 0 ? rank[p - 1] : 0);
    return dims;
}

std::vector<ZVec> hilbert_basis_2d(const GkzDatum& datum) {
    if (datum.dim() != 2) throw Error("hilbert basis oracle is two-dimensional");
    REQUIRE_MESSAGE_IMPL: ;
    std::vector<ZVec> rays;
    for (const auto& sf : datum.facets())
        rays.push_back(primitive_vector(datum.matrix().column(datum.face(sf.facet_id).indices.front())));
    if (rays.size() != 2) throw Error("expected two extreme rays");
    const ZVec &u = rays[0], &v = rays[1];

    auto in_cone = [&](const ZVec& z) {
        for (const auto& sf : datum.facets())
            if (dot(sf.row, z) < 0) return false;
        return true;
    };

    // lattice points of the closed parallelogram spanned by the rays
    ZVec lo(2, Int(0)), hi(2, Int(0));
    for (int i = 0; i < 2; ++i) {
        for (const ZVec* r : {&u, &v}) {
            if ((*r)[i] < 0) lo[i] += (*r)[i];
            else hi[i] += (*r)[i];
        }
    }
    IntMatrix R = IntMatrix::from_columns({u, v}, 2);
    std::vector<ZVec> candidates;
    for (Int x = lo[0]; x <= hi[0]; ++x)
        for (Int y = lo[1]; y <= hi[1]; ++y) {
            ZVec z{x, y};
            if (is_zero(z) || !in_cone(z)) continue;
            auto ab = solve_rational(R, to_qvec(z));
            if (!ab) continue;
            if ((*ab)[0] < 0 || (*ab)[0] > 1 || (*ab)[1] < 0 || (*ab)[1] > 1) continue;
            candidates.push_back(z);
        }

    std::vector<ZVec> basis;
    for (const ZVec& z : candidates) {
        bool reducible = false;
        for (const ZVec& c : candidates) {
            ZVec rest = z - c;
            if (!is_zero(rest) && c != z && in_cone(rest)) { reducible = true; break; }
        }
        if (!reducible) basis.push_back(z);
    }
    std::sort(basis.begin(), basis.end());
    return basis;
}

std::shared_ptr<GkzDatum> random_datum(std::mt19937& rng, int dmax, int nmax, int entry_bound) {
    std::uniform_int_distribution<int> dd(1, dmax);
    for (int tries = 0; tries < 4000; ++tries) {
        int d = dd(rng);
        std::uniform_int_distribution<int> nn(d, nmax);
        int n = nn(rng);
        std::uniform_int_distribution<int> ee(-entry_bound, entry_bound);
        IntMatrix A(d, n);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < n; ++j) A.at(i, j) = ee(rng);
        try {
            return build_datum(A);
        } catch (const Error&) {
            continue;
        }
    }
    throw Error("random datum generation failed");
}

ZVec random_degree(std::mt19937& rng, int dim, int bound) {
    std::uniform_int_distribution<int> ee(-bound, bound);
    ZVec v(dim);
    for (int i = 0; i < dim; ++i) v[i] = ee(rng);
    return v;
}

} // namespace gkz::testing
