#include "gkz/membership.hpp"

#include "gkz/linprog.hpp"

#include <algorithm>
#include <functional>

namespace gkz {

namespace {

constexpr size_t kMemoCap = 200000;

// functionals on Q^k that are nonnegative on every generator; includes a
// strictly positive one (the generators span a pointed cone)
std::vector<ZVec> pruning_functionals(const std::vector<ZVec>& gens, int k) {
    std::vector<ZVec> out;
    if (k == 0) return out;
    IntMatrix G = IntMatrix::from_columns(gens, k);
    if (auto phi = find_positive_functional(G)) out.push_back(*phi);
    // hyperplane candidates from (k-1)-subsets
    std::set<ZVec> seen(out.begin(), out.end());
    std::vector<int> subset;
    std::function<void(int)> rec = [&](int start) {
        if (int(subset.size()) == k - 1) {
            IntMatrix S = G.select_columns(subset);
            IntMatrix K = kernel_lattice(S.transposed());
            if (K.cols() == 1) {
                ZVec h = primitive_vector(K.column(0));
                bool pos = false, neg = false;
                for (const auto& g : gens) {
                    int s = sgn(dot(h, g));
                    if (s > 0) pos = true;
                    if (s < 0) neg = true;
                }
                if (pos && !neg) seen.insert(h);
                else if (neg && !pos) seen.insert(negate(h));
            }
            return;
        }
        for (int i = start; i < int(gens.size()); ++i) {
            subset.push_back(i);
            rec(i + 1);
            subset.pop_back();
        }
    };
    if (k >= 1 && !gens.empty()) rec(0);
    out.assign(seen.begin(), seen.end());
    return out;
}

struct DfsContext {
    const std::vector<ZVec>* images;
    const std::vector<ZVec>* prunes;
    const std::vector<Int>* torsion;  // moduli for the leading coords
    SearchBudget* budget;
    std::map<ZVec, bool>* memo;
    std::vector<Int>* witness;  // coefficient per image, or null
};

ZVec reduce_torsion(ZVec v, const std::vector<Int>& mods) {
    for (size_t i = 0; i < mods.size(); ++i) v[i] = mod_pos(v[i], mods[i]);
    return v;
}

bool dfs(DfsContext& ctx, size_t pos, const ZVec& target) {
    ctx.budget->tick();
    size_t nt = ctx.torsion->size();
    if (is_zero(target)) return true;
    for (const auto& h : *ctx.prunes) {
        Int s = 0;
        for (size_t i = 0; i < h.size(); ++i) s += h[i] * target[nt + i];
        if (s < 0) return false;
    }
    if (pos == ctx.images->size()) return false;
    const ZVec& g = (*ctx.images)[pos];
    // bound the multiplicity through any functional positive on g
    Int maxk = -1;
    for (const auto& h : *ctx.prunes) {
        Int hg = 0, ht = 0;
        for (size_t i = 0; i < h.size(); ++i) {
            hg += h[i] * g[nt + i];
            ht += h[i] * target[nt + i];
        }
        if (hg > 0) {
            Int k = floor_div(ht, hg);
            if (maxk < 0 || k < maxk) maxk = k;
        }
    }
    if (maxk < 0) maxk = 0;  // saturation guarantees a positive functional on g
    // descend with the largest multiple first
    for (Int k = maxk; k >= 0; --k) {
        ZVec next(target.size());
        for (size_t i = 0; i < nt; ++i) next[i] = mod_pos(target[i] - k * g[i], (*ctx.torsion)[i]);
        for (size_t i = nt; i < target.size(); ++i) next[i] = target[i] - k * g[i];
        bool hit;
        ZVec key = next;
        key.push_back(Int(pos + 1));
        auto it = ctx.memo->find(key);
        if (it != ctx.memo->end()) {
            hit = it->second;
        } else {
            hit = dfs(ctx, pos + 1, next);
            if (ctx.memo->size() < kMemoCap) (*ctx.memo)[key] = hit;
        }
        if (hit) {
            if (ctx.witness) (*ctx.witness)[pos] = k;
            return true;
        }
    }
    return false;
}

} // namespace

QuotientMonoid::QuotientMonoid(const IntMatrix& gens, std::vector<int> subtracted)
    : gens_(gens), sub_(std::move(subtracted)) {
    int d = gens.rows(), n = gens.cols();
    std::sort(sub_.begin(), sub_.end());

    // saturate: a column whose negated image lies in the rational cone of the
    // images is invertible in the localized monoid
    while (true) {
        IntMatrix T(d, 0);
        if (!sub_.empty()) T = gens.select_columns(sub_);
        SmithForm S = smith_normal_form(T);
        torsion_.clear();
        torsion_rows_.clear();
        free_rows_.clear();
        for (int i = 0; i < S.rank; ++i)
            if (S.D.at(i, i) != 1) {
                torsion_.push_back(S.D.at(i, i));
                torsion_rows_.push_back(i);
            }
        for (int i = S.rank; i < d; ++i) free_rows_.push_back(i);
        free_rank_ = int(free_rows_.size());
        proj_ = S.U;

        active_.clear();
        for (int j = 0; j < n; ++j)
            if (!std::binary_search(sub_.begin(), sub_.end(), j)) active_.push_back(j);

        images_.clear();
        std::vector<ZVec> free_parts;
        for (int j : active_) {
            ZVec img = project(gens.column(j));
            images_.push_back(img);
            free_parts.push_back(ZVec(img.begin() + torsion_.size(), img.end()));
        }
        if (active_.empty()) break;

        IntMatrix F = IntMatrix::from_columns(free_parts, free_rank_);
        bool grew = false;
        for (size_t a = 0; a < active_.size(); ++a) {
            QVec neg(free_rank_);
            for (int i = 0; i < free_rank_; ++i) neg[i] = Rat(-free_parts[a][i]);
            if (in_rational_cone(F, neg)) {
                sub_.push_back(active_[a]);
                std::sort(sub_.begin(), sub_.end());
                grew = true;
                break;
            }
        }
        if (!grew) break;
    }

    std::vector<ZVec> free_parts;
    for (const auto& img : images_)
        free_parts.push_back(ZVec(img.begin() + torsion_.size(), img.end()));
    prunes_ = pruning_functionals(free_parts, free_rank_);
}

ZVec QuotientMonoid::project(const ZVec& v) const {
    ZVec y = proj_.apply(v);
    ZVec out;
    out.reserve(torsion_.size() + free_rows_.size());
    for (size_t i = 0; i < torsion_rows_.size(); ++i)
        out.push_back(mod_pos(y[torsion_rows_[i]], torsion_[i]));
    for (int i : free_rows_) out.push_back(y[i]);
    return out;
}

bool QuotientMonoid::contains(const ZVec& alpha, SearchBudget& budget) const {
    ZVec target = project(alpha);
    if (is_zero(target)) return true;
    std::lock_guard<std::mutex> lock(memo_mutex_);
    DfsContext ctx;
    ctx.images = &images_;
    ctx.prunes = &prunes_;
    ctx.torsion = &torsion_;
    ctx.budget = &budget;
    ctx.memo = &memo_;
    ctx.witness = nullptr;
    return dfs(ctx, 0, target);
}

SpanResult in_nonneg_span(const IntMatrix& gens, const ZVec& alpha, SearchBudget* budget) {
    SearchBudget local;
    if (!budget) budget = &local;
    SpanResult res;

    QuotientMonoid qm(gens, {});
    if (!qm.contains(alpha, *budget)) return res;
    res.inside = true;

    if (!qm.absorbed().empty()) return res;  // witness reconstruction not tracked past units

    // rerun the pointed search with coefficients tracked
    std::vector<ZVec> cols = gens.columns();
    std::vector<ZVec> imgs;
    for (auto& c : cols) imgs.push_back(c);
    std::vector<Int> torsion;
    std::vector<ZVec> prunes = pruning_functionals(imgs, gens.rows());
    std::map<ZVec, bool> memo;
    std::vector<Int> coeffs(cols.size(), Int(0));
    DfsContext ctx;
    ctx.images = &imgs;
    ctx.prunes = &prunes;
    ctx.torsion = &torsion;
    ctx.budget = budget;
    ctx.memo = &memo;
    ctx.witness = &coeffs;
    if (dfs(ctx, 0, alpha)) {
        ZVec check(gens.rows(), Int(0));
        for (size_t j = 0; j < cols.size(); ++j) check = check + coeffs[j] * cols[j];
        if (check == alpha) res.witness = coeffs;
    }
    return res;
}

MembershipOracle::MembershipOracle(std::shared_ptr<GkzDatum> datum) : datum_(std::move(datum)) {
    monoids_.resize(datum_->face_count());
    for (int id = 0; id < datum_->face_count(); ++id)
        monoids_[id] = std::make_unique<QuotientMonoid>(datum_->matrix(), datum_->face(id).indices);
}

bool MembershipOracle::in_semigroup(const ZVec& alpha, SearchBudget& budget) const {
    return in_localized(datum_->empty_face_id(), alpha, budget);
}

bool MembershipOracle::in_localized(int face_id, const ZVec& alpha, SearchBudget& budget) const {
    {
        std::lock_guard<std::mutex> lock(memo_mutex_);
        auto it = memo_.find({face_id, alpha});
        if (it != memo_.end()) return it->second;
    }
    const Face& f = datum_->face(face_id);

    // necessary facet conditions: every support function of a facet above F is
    // nonnegative on N A - N F
    bool feasible = true;
    for (const auto& sf : datum_->facets()) {
        if (!datum_->face_leq(face_id, sf.facet_id)) continue;
        if (dot(sf.row, alpha) < 0) { feasible = false; break; }
    }

    bool result = false;
    if (feasible) {
        if (!f.indices.empty()) {
            // monotone scan along the face interior direction; sound fast path
            ZVec sigma(datum_->dim(), Int(0));
            for (int j : f.indices) sigma = sigma + datum_->matrix().column(j);
            ZVec probe = alpha;
            for (std::uint64_t k = 0; k <= scan_limit && !result; ++k) {
                SearchBudget slice{2000, 0};
                try {
                    if (monoids_[datum_->empty_face_id()]->contains(probe, slice)) result = true;
                } catch (const BudgetExceeded&) {
                    break;  // inconclusive; fall through to the exact decision
                }
                budget.used += slice.used;
                if (budget.used > budget.limit) throw BudgetExceeded(budget.used);
                probe = probe + sigma;
            }
        }
        if (!result) result = monoids_[face_id]->contains(alpha, budget);
    }

    std::lock_guard<std::mutex> lock(memo_mutex_);
    if (memo_.size() < kMemoCap) memo_[{face_id, alpha}] = result;
    return result;
}

std::vector<ZVec> zonotope_lattice_points(const IntMatrix& A) {
    int d = A.rows(), n = A.cols();
    ZVec lo(d, Int(0)), hi(d, Int(0));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < n; ++j) {
            if (A.at(i, j) < 0) lo[i] += A.at(i, j);
            else hi[i] += A.at(i, j);
        }
    std::vector<ZVec> points;
    ZVec z = lo;
    while (true) {
        if (in_half_open_zonotope(A, z)) points.push_back(z);
        int k = d - 1;
        while (k >= 0) {
            if (++z[k] <= hi[k]) break;
            z[k] = lo[k];
            --k;
        }
        if (k < 0) break;
    }
    return points;
}

} // namespace gkz
