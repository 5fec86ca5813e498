#include "gkz/sres.hpp"

#include <algorithm>
#include <numeric>

namespace gkz {

std::string to_string(TriState t) {
    switch (t) {
        case TriState::False: return "no";
        case TriState::True: return "yes";
        default: return "unknown";
    }
}

namespace {

long to_long(const Int& x) {
    if (x > Int(std::numeric_limits<long>::max() / 4) || x < Int(std::numeric_limits<long>::min() / 4))
        throw Error("value out of the supported desk-scale range");
    return long(x);
}

} // namespace

FacetRowTable::FacetRowTable(const GkzDatum& datum, int facet_face_id) : facet_id_(facet_face_id) {
    if (datum.dim() != 2) throw Error("facet row tables require a two-dimensional datum");
    const Face& facet = datum.face(facet_face_id);
    if (facet.rank != 1) throw NotAFacet("row table face is not a facet");
    h_ = datum.support_function(facet_face_id).row;
    g_ = primitive_vector(datum.matrix().column(facet.indices.front()));

    auto b = solve_integer(IntMatrix::from_columns({h_}, 2).transposed(), {Int(1)});
    if (!b) throw Error("support function is not primitive");
    b_ = *b;

    // gamma: gcd of the ray multipliers of the facet columns
    int coord = g_[0] != 0 ? 0 : 1;
    Int gamma_int = 0;
    for (int j : facet.indices) {
        Int mult = datum.matrix().at(coord, j) / g_[coord];
        gamma_int = gcd_int(gamma_int, mult);
    }
    gamma_ = to_long(gamma_int);

    for (int j = 0; j < datum.ncols(); ++j) {
        if (std::binary_search(facet.indices.begin(), facet.indices.end(), j)) continue;
        ZVec col = datum.matrix().column(j);
        OffColumn oc;
        oc.level = to_long(dot(h_, col));
        oc.pos = to_long(position_of(col));
        oc.residue = ((oc.pos % gamma_) + gamma_) % gamma_;
        off_cols_.push_back(oc);
    }

    long level_sum = 0;
    for (auto& oc : off_cols_) level_sum += oc.level;
    bound_ = gamma_ * level_sum;

    constexpr long kNoPos = std::numeric_limits<long>::max() / 4;
    reach_.assign(bound_ + 1, std::vector<char>(gamma_, 0));
    minpos_.assign(bound_ + 1, std::vector<long>(gamma_, kNoPos));
    reach_[0][0] = 1;
    minpos_[0][0] = 0;
    for (long L = 1; L <= bound_; ++L)
        for (auto& oc : off_cols_) {
            if (oc.level > L) continue;
            for (long r = 0; r < gamma_; ++r) {
                long pr = ((r - oc.residue) % gamma_ + gamma_) % gamma_;
                if (!reach_[L - oc.level][pr]) continue;
                reach_[L][r] = 1;
                minpos_[L][r] = std::min(minpos_[L][r], minpos_[L - oc.level][pr] + oc.pos);
            }
        }

    // numerical semigroup of {gamma * level_i}: tail certificate for high levels
    ns_gcd_ = 0;
    for (auto& oc : off_cols_) ns_gcd_ = std::gcd(ns_gcd_, gamma_ * oc.level);
    if (ns_gcd_ == 0) ns_gcd_ = 1;
    long ns_bound = 1;
    for (auto& oc : off_cols_) ns_bound = std::max(ns_bound, gamma_ * oc.level);
    ns_bound = ns_bound * ns_bound + 2 * ns_bound + 2;
    ns_table_.assign(ns_bound + 1, 0);
    ns_table_[0] = 1;
    for (long t = 1; t <= ns_bound; ++t)
        for (auto& oc : off_cols_) {
            long step = gamma_ * oc.level;
            if (step <= t && ns_table_[t - step]) { ns_table_[t] = 1; break; }
        }
    ns_cond_ = 0;
    for (long t = ns_bound; t >= 0; --t) {
        if (t % ns_gcd_ == 0 && !ns_table_[t]) { ns_cond_ = t + 1; break; }
    }
    stable_level_ = bound_ + ns_cond_ + ns_gcd_;

    // conductor of the facet multiplier semigroup, for position thresholds
    std::vector<long> mults;
    for (int j : facet.indices) {
        Int mult = datum.matrix().at(coord, j) / g_[coord];
        mults.push_back(to_long(mult));
    }
    long pb = 1;
    for (long m : mults) pb = std::max(pb, m);
    pb = pb * pb + pb;
    std::vector<char> ps(pb + 1, 0);
    ps[0] = 1;
    for (long t = 1; t <= pb; ++t)
        for (long m : mults)
            if (m <= t && ps[t - m]) { ps[t] = 1; break; }
    pos_cond_ = 0;
    for (long t = pb; t >= 0; --t)
        if (t % gamma_ == 0 && !ps[t]) { pos_cond_ = t + 1; break; }
}

std::vector<long> FacetRowTable::ns_decompose(Int t) const {
    std::vector<long> copies(off_cols_.size(), 0);
    if (off_cols_.empty()) return copies;
    long big = gamma_ * off_cols_.front().level;
    while (t > Int(ns_cond_ + big)) {
        copies[0] += 1;
        t -= big;
    }
    long tt = to_long(t);
    while (tt > 0) {
        bool moved = false;
        for (size_t i = 0; i < off_cols_.size(); ++i) {
            long step = gamma_ * off_cols_[i].level;
            if (step <= tt && ns_table_[tt - step]) {
                copies[i] += 1;
                tt -= step;
                moved = true;
                break;
            }
        }
        if (!moved) throw Error("internal error: numerical semigroup decomposition failed");
    }
    return copies;
}

std::optional<Int> FacetRowTable::position_threshold(const Int& s, long residue) const {
    if (s < 0 || !level_residues(s)[residue]) return std::nullopt;
    constexpr long kNoPos = std::numeric_limits<long>::max() / 4;
    if (s <= Int(bound_)) {
        long base = minpos_[to_long(s)][residue];
        if (base >= kNoPos) return std::nullopt;
        return Int(base + pos_cond_);
    }
    for (long L0 = 0; L0 <= bound_; ++L0) {
        if (!reach_[L0][residue] || !ns_member(s - Int(L0))) continue;
        std::vector<long> copies = ns_decompose(s - Int(L0));
        Int base = Int(minpos_[L0][residue]);
        for (size_t i = 0; i < copies.size(); ++i)
            base += Int(gamma_) * Int(copies[i]) * Int(off_cols_[i].pos);
        return base + Int(pos_cond_);
    }
    return std::nullopt;
}

bool FacetRowTable::ns_member(const Int& t) const {
    if (t < 0) return false;
    if (t >= Int(long(ns_table_.size()))) return mod_pos(t, Int(ns_gcd_)) == 0;
    return ns_table_[to_long(t)] != 0;
}

Int FacetRowTable::position_of(const ZVec& z) const {
    ZVec w = z - dot(h_, z) * b_;
    int coord = g_[0] != 0 ? 0 : 1;
    if (w[coord] % g_[coord] != 0 || w[1 - coord] * g_[coord] != w[coord] * g_[1 - coord])
        throw Error("internal error: vector not on the expected line");
    return w[coord] / g_[coord];
}

std::vector<bool> FacetRowTable::level_residues(const Int& s) const {
    std::vector<bool> out(gamma_, false);
    if (s < 0) return out;
    if (s <= Int(bound_)) {
        long L = to_long(s);
        for (long r = 0; r < gamma_; ++r) out[r] = reach_[L][r] != 0;
        return out;
    }
    for (long L0 = 0; L0 <= bound_; ++L0)
        for (long r = 0; r < gamma_; ++r)
            if (reach_[L0][r] && ns_member(s - Int(L0))) out[r] = true;
    return out;
}

bool FacetRowTable::level_full(const Int& s) const {
    auto res = level_residues(s);
    return std::all_of(res.begin(), res.end(), [](bool b) { return b; });
}

bool FacetRowTable::localized_membership(const ZVec& z) const {
    Int s = dot(h_, z);
    if (s < 0) return false;
    return level_residues(s)[position_residue(z)];
}

SresContext::SresContext(std::shared_ptr<MembershipOracle> oracle) : oracle_(std::move(oracle)) {
    const GkzDatum& datum = oracle_->datum();
    if (datum.dim() == 2) {
        for (const auto& sf : datum.facets()) tables_.emplace_back(datum, sf.facet_id);
    }
    for (int j = 0; j < datum.ncols(); ++j)
        single_.push_back(std::make_unique<QuotientMonoid>(datum.matrix(), std::vector<int>{j}));
}

bool SresContext::has_exact_backend() const {
    return datum().is_normal() || datum().dim() <= 2;
}

bool SresContext::normal_backend(const QVec& beta) const {
    for (const auto& sf : datum().facets()) {
        Rat v = dot(sf.row, beta);
        if (is_integer(v) && v < 0) return true;
    }
    return false;
}

bool SresContext::point_test(const ZVec& beta, SearchBudget& budget) const {
    if (oracle_->in_semigroup(beta, budget)) return false;  // true degrees of H^1 avoid N A
    for (const auto& qm : single_)
        if (qm->contains(beta, budget)) return true;
    return false;
}

bool SresContext::d2_backend(const QVec& beta, SearchBudget& budget) const {
    // line components of the quasidegree sets: a lattice line parallel to a facet
    // belongs to some qdeg H^1 exactly when the facet row at its level misses a
    // position residue
    for (const auto& table : tables_) {
        Rat level = dot(table.functional(), beta);
        if (is_integer(level) && !table.level_full(to_int(level))) return true;
    }
    // isolated components are true degrees
    if (is_integral(beta) && point_test(to_zvec(beta), budget)) return true;
    return false;
}

TriState SresContext::contains(const QVec& beta, SearchBudget& budget) const {
    const GkzDatum& datum = oracle_->datum();
    if (datum.is_normal()) return normal_backend(beta) ? TriState::True : TriState::False;
    if (datum.dim() <= 2) {
        if (datum.dim() == 1) {
            // no positive-dimensional components: qdeg = true degree sets
            if (is_integral(beta) && point_test(to_zvec(beta), budget)) return TriState::True;
            return TriState::False;
        }
        return d2_backend(beta, budget) ? TriState::True : TriState::False;
    }
    if (is_integral(beta) && point_test(to_zvec(beta), budget)) return TriState::True;
    return TriState::Unknown;
}

} // namespace gkz
