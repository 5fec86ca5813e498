#pragma once

#include "gkz/membership.hpp"

#include <optional>

namespace gkz {

enum class TriState { False = 0, True = 1, Unknown = 2 };

std::string to_string(TriState t);

// Reachability of (level, position residue) pairs for the semigroup of A along
// one facet ray, d == 2 only. Level s = value of the facet support function;
// positions are counted along the primitive ray direction g, reduced modulo
// gamma = gcd of the multipliers of the facet columns. The table is exact for
// all levels: beyond the dp bound the level data is periodic, certified by the
// numerical-semigroup tail of the off-facet column levels.
class FacetRowTable {
public:
    FacetRowTable(const GkzDatum& datum, int facet_face_id);

    int facet_face_id() const { return facet_id_; }
    long gamma() const { return gamma_; }
    long level_period() const { return ns_gcd_; }
    long stable_level() const { return stable_level_; }  // data periodic from here on

    // residues mod gamma of the positions of N A on the line {h_G = s}
    std::vector<bool> level_residues(const Int& s) const;
    bool level_full(const Int& s) const;

    Int level_of(const ZVec& z) const { return dot(h_, z); }
    Rat level_of(const QVec& z) const { return dot(h_, z); }
    Int position_of(const ZVec& z) const;  // g-coordinate of z - level*b
    long position_residue(const ZVec& z) const { return long(mod_pos(position_of(z), Int(gamma_))); }

    // z in N A - N G, via the closed form: level >= 0 and residue reachable
    bool localized_membership(const ZVec& z) const;

    // position T such that every position >= T congruent to the residue lies in
    // the row of N A at the level; nullopt when the residue is unreachable there
    std::optional<Int> position_threshold(const Int& s, long residue) const;

    const ZVec& ray() const { return g_; }
    const ZVec& functional() const { return h_; }

private:
    bool ns_member(const Int& t) const;
    std::vector<long> ns_decompose(Int t) const;  // copies of gamma*level_i per off column

    struct OffColumn {
        long level;
        long pos;
        long residue;
    };

    int facet_id_;
    ZVec h_, g_, b_;
    long gamma_ = 1;
    std::vector<OffColumn> off_cols_;
    long bound_ = 0;  // dp levels 0..bound_
    std::vector<std::vector<char>> reach_;
    std::vector<std::vector<long>> minpos_;  // minimal position per (level, residue)
    long ns_gcd_ = 1;    // gcd of {gamma * level_i}
    long ns_cond_ = 0;   // conductor: t >= ns_cond_ and ns_gcd_ | t implies t in NS
    std::vector<char> ns_table_;
    long pos_cond_ = 0;  // conductor of the facet multiplier semigroup (in steps of gamma)
    long stable_level_ = 0;
};

// Exact strongly-resonant decision context; the facet tables exist for d == 2.
class SresContext {
public:
    explicit SresContext(std::shared_ptr<MembershipOracle> oracle);

    const GkzDatum& datum() const { return oracle_->datum(); }
    const MembershipOracle& oracle() const { return *oracle_; }
    const std::vector<FacetRowTable>& tables() const { return tables_; }

    bool has_exact_backend() const;  // normal closed form or d <= 2

    // beta lies in the quasidegree set of some H^1 along a single-column localization
    TriState contains(const QVec& beta, SearchBudget& budget) const;

    // individual backends, for cross-validation
    bool normal_backend(const QVec& beta) const;                            // valid when is_normal()
    bool d2_backend(const QVec& beta, SearchBudget& budget) const;          // valid when dim <= 2
    bool point_test(const ZVec& beta, SearchBudget& budget) const;          // beta a true degree of some H^1

private:
    std::shared_ptr<MembershipOracle> oracle_;
    std::vector<FacetRowTable> tables_;                       // d == 2 only
    std::vector<std::unique_ptr<QuotientMonoid>> single_;     // N A - N a_j per column
};

} // namespace gkz
