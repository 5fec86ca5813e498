#pragma once

#include "gkz/saito.hpp"
#include "gkz/sres.hpp"

namespace gkz {

struct ClassifierConfig {
    std::uint64_t budget = 1000000;
    int kmax = 25;       // translate search along epsilon_A
    int box_radius = 3;  // secondary integer box search
    int walk_cap = 64;   // cleanup walks in the structured search
};

struct MgmVerdict {
    TriState verdict = TriState::Unknown;
    std::optional<QVec> witness;
    std::string stage;  // search stage that produced the witness
    std::string note;
};

struct FaceData {
    CosetSet ef;
    CosetSet estar;
};

struct ClassificationReport {
    QVec beta;
    std::vector<FaceData> per_face;
    OrbitSupport fiber, cofiber;
    bool in_exceptional = false;
    TriState sres = TriState::Unknown;
    MgmVerdict mixed, dual_mixed;
    std::optional<OpenSetDescription> open_u, open_v;
    std::string open_u_error, open_v_error;
    bool budget_exhausted = false;
};

class Classifier {
public:
    explicit Classifier(std::shared_ptr<GkzDatum> datum);

    const GkzDatum& datum() const { return oracle_->datum(); }
    const MembershipOracle& oracle() const { return *oracle_; }
    const LocalCohomology& local_cohomology() const { return *lc_; }
    const SresContext& sres_context() const { return *sres_; }

    TriState sres_contains(const QVec& beta, SearchBudget& budget) const {
        return sres_->contains(beta, budget);
    }

    MgmVerdict is_mixed_gauss_manin(const QVec& beta, const ClassifierConfig& cfg) const;
    MgmVerdict is_dual_mixed_gauss_manin(const QVec& beta, const ClassifierConfig& cfg) const;

    ClassificationReport classify(const QVec& beta, const ClassifierConfig& cfg) const;

    bool validate_mixed_witness(const QVec& beta, const QVec& witness, SearchBudget& budget) const;
    bool validate_dual_witness(const QVec& beta, const QVec& witness, SearchBudget& budget) const;

private:
    struct FaceRequirement {
        int face_id;
        std::vector<QVec> target;  // canonical representatives that must be matched
        bool dual = false;         // match E*: target compared against -E_F(-candidate) ... see impl
    };

    // candidate must be nonresonant and reproduce every required E-set exactly;
    // used with candidate = beta' (mixed) resp. candidate = -beta' (dual)
    bool candidate_ok(const QVec& candidate, const std::vector<FaceRequirement>& reqs,
                      SearchBudget& budget) const;

    // exact two-dimensional search: engaged result means decided (inner value is
    // a candidate, or nullopt when certifiably none exists)
    std::optional<std::optional<QVec>> d2_decide(const QVec& base,
                                                 const std::vector<FaceRequirement>& reqs,
                                                 const ClassifierConfig& cfg,
                                                 SearchBudget& budget) const;

    std::shared_ptr<MembershipOracle> oracle_;
    std::shared_ptr<LocalCohomology> lc_;
    std::shared_ptr<SresContext> sres_;
};

} // namespace gkz
