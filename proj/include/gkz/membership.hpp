#pragma once

#include "gkz/datum.hpp"
#include "gkz/errors.hpp"

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>

namespace gkz {

struct SearchBudget {
    std::uint64_t limit = 1000000;
    std::uint64_t used = 0;
    void tick() {
        if (++used > limit) throw BudgetExceeded(used);
    }
};

struct SpanResult {
    bool inside = false;
    std::optional<ZVec> witness;  // nonnegative combination, when tracked
};

// alpha in the N-span of the columns of gens; exact, terminating, budget-guarded
SpanResult in_nonneg_span(const IntMatrix& gens, const ZVec& alpha, SearchBudget* budget = nullptr);

// Decision engine for  alpha in N(cols) - N(cols[sub])  where sub is any subset
// of column indices. Internally works in the quotient of Z^d by the lattice of
// the subtracted columns, enlarging the subtracted set by every column whose
// negated image lies in the rational cone of the images (such columns become
// invertible, so membership is unchanged); the residual image cone is pointed
// and the search is finite.
class QuotientMonoid {
public:
    QuotientMonoid(const IntMatrix& gens, std::vector<int> subtracted);

    bool contains(const ZVec& alpha, SearchBudget& budget) const;

    const std::vector<int>& absorbed() const { return sub_; }
    bool trivial_quotient() const { return free_rank_ == 0 && torsion_.empty(); }

private:
    ZVec project(const ZVec& v) const;

    IntMatrix gens_;
    std::vector<int> sub_;        // saturated subtracted set
    IntMatrix proj_;              // row transform (U of the Smith form of the sublattice)
    std::vector<Int> torsion_;    // moduli > 1
    std::vector<int> torsion_rows_, free_rows_;
    int free_rank_ = 0;
    std::vector<int> active_;     // generator columns outside sub_
    std::vector<ZVec> images_;    // projected active columns (torsion part first)
    std::vector<ZVec> prunes_;    // functionals on the free part, >= 0 on every image
    mutable std::map<ZVec, bool> memo_;
    mutable std::mutex memo_mutex_;
};

// Membership layer bound to a datum, with per-face quotient monoids and a memo
// of (face, degree) queries. Thread-safe.
class MembershipOracle {
public:
    explicit MembershipOracle(std::shared_ptr<GkzDatum> datum);

    const GkzDatum& datum() const { return *datum_; }
    std::shared_ptr<GkzDatum> datum_ptr() const { return datum_; }

    // alpha in N A
    bool in_semigroup(const ZVec& alpha, SearchBudget& budget) const;

    // alpha in N A - N F
    bool in_localized(int face_id, const ZVec& alpha, SearchBudget& budget) const;

    std::uint64_t scan_limit = 8;  // quick monotone sigma_F scan before the exact decision

private:
    std::shared_ptr<GkzDatum> datum_;
    std::vector<std::unique_ptr<QuotientMonoid>> monoids_;  // per face
    mutable std::map<std::pair<int, ZVec>, bool> memo_;
    mutable std::mutex memo_mutex_;
};

std::vector<ZVec> zonotope_lattice_points(const IntMatrix& A);

} // namespace gkz
