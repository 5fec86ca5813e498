#include "gkz/ishida.hpp"

#include <algorithm>

namespace gkz {

namespace {

Rat det_rational(std::vector<QVec> cols) {
    int n = int(cols.size());
    Rat det = 1;
    for (int k = 0; k < n; ++k) {
        int p = -1;
        for (int i = k; i < n; ++i)
            if (cols[k][i] != 0) { p = i; break; }
        if (p < 0) return 0;
        if (p != k) {
            for (auto& c : cols) std::swap(c[p], c[k]);
            det = -det;
        }
        det *= cols[k][k];
        Rat inv = Rat(1) / cols[k][k];
        for (int j = k + 1; j < n; ++j) {
            Rat f = cols[j][k] * inv;
            if (f == 0) continue;
            for (int i = k; i < n; ++i) cols[j][i] -= f * cols[k][i];
        }
    }
    return det;
}

// orientation sign of sigma inside tau, rank(tau) = rank(sigma) + 1
int incidence_sign(const GkzDatum& datum, int sigma, int tau) {
    IntMatrix Bs = datum.face_span_basis(sigma);
    IntMatrix Bt = datum.face_span_basis(tau);
    // first column of tau outside the span of sigma
    ZVec v;
    for (int j : datum.face(tau).indices) {
        ZVec c = datum.matrix().column(j);
        if (Bs.cols() == 0 || !solve_rational(Bs, to_qvec(c)).has_value()) {
            v = c;
            break;
        }
    }
    std::vector<ZVec> cols = Bs.columns();
    cols.push_back(v);
    auto coords = express_in_basis(Bt, cols);
    if (!coords) throw Error("internal error: face basis does not span its superface column");
    Rat det = det_rational(*coords);
    if (det == 0) throw Error("internal error: degenerate orientation change of basis");
    return det > 0 ? 1 : -1;
}

} // namespace

IshidaComplex build_ishida(const GkzDatum& datum, int face_id) {
    IshidaComplex cx;
    cx.base_face = face_id;
    cx.nodes = datum.faces_containing(face_id);
    int base_rank = datum.face(face_id).rank;
    cx.position.resize(cx.nodes.size());
    for (size_t i = 0; i < cx.nodes.size(); ++i)
        cx.position[i] = datum.face(cx.nodes[i]).rank - base_rank;
    cx.length = datum.dim() - base_rank;

    for (size_t i = 0; i < cx.nodes.size(); ++i)
        for (size_t j = 0; j < cx.nodes.size(); ++j) {
            if (cx.position[j] != cx.position[i] + 1) continue;
            if (!datum.face_leq(cx.nodes[i], cx.nodes[j])) continue;
            cx.sign[{int(i), int(j)}] = incidence_sign(datum, cx.nodes[i], cx.nodes[j]);
        }

    // d o d = 0 on every length-2 interval
    for (size_t i = 0; i < cx.nodes.size(); ++i)
        for (size_t j = 0; j < cx.nodes.size(); ++j) {
            if (cx.position[j] != cx.position[i] + 2) continue;
            if (!datum.face_leq(cx.nodes[i], cx.nodes[j])) continue;
            int total = 0;
            for (size_t m = 0; m < cx.nodes.size(); ++m) {
                auto a = cx.sign.find({int(i), int(m)});
                auto b = cx.sign.find({int(m), int(j)});
                if (a != cx.sign.end() && b != cx.sign.end())
                    total += a->second * b->second;
            }
            if (total != 0) throw Error("internal error: Ishida signs do not square to zero");
        }
    return cx;
}

LocalCohomology::LocalCohomology(std::shared_ptr<MembershipOracle> oracle) : oracle_(std::move(oracle)) {
    const GkzDatum& datum = oracle_->datum();
    complexes_.reserve(datum.face_count());
    for (int id = 0; id < datum.face_count(); ++id)
        complexes_.push_back(build_ishida(datum, id));
}

const IshidaComplex& LocalCohomology::complex_for(int face_id) const {
    return complexes_.at(face_id);
}

GradedLCProfile LocalCohomology::graded_dims(int face_id, const ZVec& alpha, SearchBudget& budget) const {
    const IshidaComplex& cx = complexes_.at(face_id);
    GradedLCProfile prof;
    prof.degree = alpha;
    prof.dims.assign(cx.length + 1, 0);

    std::vector<char> pop(cx.nodes.size(), 0);
    std::vector<int> count(cx.length + 1, 0);
    for (size_t i = 0; i < cx.nodes.size(); ++i) {
        pop[i] = oracle_->in_localized(cx.nodes[i], alpha, budget) ? 1 : 0;
        if (pop[i]) ++count[cx.position[i]];
    }

    std::vector<int> rank(cx.length + 1, 0);  // rank of d^p
    for (int p = 0; p < cx.length; ++p) {
        std::vector<int> src, dst;
        for (size_t i = 0; i < cx.nodes.size(); ++i) {
            if (!pop[i]) continue;
            if (cx.position[i] == p) src.push_back(int(i));
            if (cx.position[i] == p + 1) dst.push_back(int(i));
        }
        if (src.empty() || dst.empty()) { rank[p] = 0; continue; }
        IntMatrix M(int(dst.size()), int(src.size()));
        for (size_t r = 0; r < dst.size(); ++r)
            for (size_t c = 0; c < src.size(); ++c) {
                auto it = cx.sign.find({src[c], dst[r]});
                if (it != cx.sign.end()) M.at(int(r), int(c)) = it->second;
            }
        rank[p] = rank_of(M);
    }
    for (int p = 0; p <= cx.length; ++p) {
        int below = (p > 0) ? rank[p - 1] : 0;
        prof.dims[p] = count[p] - rank[p] - below;
        if (prof.dims[p] < 0) throw Error("internal error: negative cohomology dimension");
    }
    return prof;
}

CosetSet LocalCohomology::estar_set(int face_id, const QVec& beta, SearchBudget& budget) const {
    const GkzDatum& datum = oracle_->datum();
    CosetSet out;
    out.face_id = face_id;
    out.modulus = datum.face_lattice(face_id);
    for (const QVec& lambda : face_degree_representatives(datum, face_id, beta)) {
        ZVec degree = to_zvec(beta - lambda);
        if (!graded_dims(face_id, degree, budget).all_zero())
            out.representatives.push_back(lambda);
    }
    return out;
}

bool LocalCohomology::strongly_exceptional_contains(int face_id, const QVec& beta,
                                                    SearchBudget& budget) const {
    const GkzDatum& datum = oracle_->datum();
    for (const QVec& lambda : face_degree_representatives(datum, face_id, beta)) {
        ZVec degree = to_zvec(beta - lambda);
        if (graded_dims(face_id, degree, budget).nonzero_below_top()) return true;
    }
    return false;
}

bool LocalCohomology::exceptional_contains(const QVec& beta, SearchBudget& budget) const {
    for (int id = 0; id < oracle_->datum().face_count(); ++id)
        if (strongly_exceptional_contains(id, beta, budget)) return true;
    return false;
}

} // namespace gkz
