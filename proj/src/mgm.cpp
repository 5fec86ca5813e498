#include "gkz/mgm.hpp"

#include <algorithm>

namespace gkz {

namespace {

std::vector<QVec> negated_canonical(const CosetSet& s) {
    std::vector<QVec> reps;
    reps.reserve(s.representatives.size());
    for (const auto& r : s.representatives) reps.push_back(Rat(-1) * r);
    return canonical_coset_list(std::move(reps), s.modulus);
}

} // namespace

Classifier::Classifier(std::shared_ptr<GkzDatum> datum) {
    oracle_ = std::make_shared<MembershipOracle>(std::move(datum));
    lc_ = std::make_shared<LocalCohomology>(oracle_);
    sres_ = std::make_shared<SresContext>(oracle_);
}

bool Classifier::candidate_ok(const QVec& candidate, const std::vector<FaceRequirement>& reqs,
                              SearchBudget& budget) const {
    if (sres_->contains(candidate, budget) != TriState::False) return false;
    for (const auto& req : reqs) {
        CosetSet have = ef_set(*oracle_, req.face_id, candidate, budget);
        if (have.representatives != req.target) return false;
    }
    return true;
}

namespace {

struct D2CheckOutcome {
    bool profiles_ok = true;
    bool lines_ok = true;       // no resonant line through the candidate
    bool point_clean = true;    // candidate is not an isolated resonance point
    bool ok() const { return profiles_ok && lines_ok && point_clean; }
    bool cleanable() const { return profiles_ok && lines_ok && !point_clean; }
};

} // namespace

std::optional<std::optional<QVec>> Classifier::d2_decide(const QVec& base,
                                                         const std::vector<FaceRequirement>& reqs,
                                                         const ClassifierConfig& cfg,
                                                         SearchBudget& budget) const {
    const GkzDatum& dat = datum();
    if (dat.dim() != 2 || sres_->tables().size() != 2) return std::nullopt;
    const FacetRowTable& t0 = sres_->tables()[0];
    const FacetRowTable& t1 = sres_->tables()[1];

    // requirement data per facet: which representative families are in play
    auto eval = [&](const QVec& candidate) -> D2CheckOutcome {
        D2CheckOutcome out;
        for (const auto& tab : sres_->tables()) {
            Rat level = dot(tab.functional(), candidate);
            if (is_integer(level) && !tab.level_full(to_int(level))) { out.lines_ok = false; break; }
        }
        if (is_integral(candidate) && sres_->point_test(to_zvec(candidate), budget))
            out.point_clean = false;
        for (const auto& req : reqs) {
            CosetSet have = ef_set(*oracle_, req.face_id, candidate, budget);
            if (have.representatives != req.target) { out.profiles_ok = false; break; }
        }
        return out;
    };

    // step vectors: w0 moves the level of facet 0 and fixes facet 1, and vice
    // versa; multiples are chosen so that level classes and position residues
    // are preserved
    auto step_vector = [&](const FacetRowTable& moving, const FacetRowTable& fixed) -> ZVec {
        ZVec ray = fixed.ray();
        for (long t = 1; t <= 1000000; ++t) {
            ZVec w = Int(t) * ray;
            Int lv = dot(moving.functional(), w);
            if (lv <= 0) throw Error("internal error: ray moves the wrong facet level");
            if (mod_pos(lv, Int(moving.level_period())) != 0) continue;
            if (mod_pos(moving.position_of(w), Int(moving.gamma())) != 0) continue;
            if (mod_pos(fixed.position_of(w), Int(fixed.gamma())) != 0) continue;
            return w;
        }
        throw Error("internal error: no invariant step multiple found");
    };
    ZVec w0 = step_vector(t0, t1);  // raises the facet-0 level
    ZVec w1 = step_vector(t1, t0);

    Int delta0 = dot(t0.functional(), w0);
    Int delta1 = dot(t1.functional(), w1);

    auto offsets_for = [&](const FacetRowTable& tab, const Int& delta) {
        Rat base_level = dot(tab.functional(), base);
        bool integral = is_integer(base_level);
        Rat lo = integral ? Rat(0) : -Rat(Int(tab.stable_level()) + 2 * delta);
        Rat hi = Rat(Int(tab.stable_level()) + 2 * delta);
        Rat diff_lo = lo - base_level, diff_hi = hi - base_level;
        Int o_lo = -floor_div(num(-diff_lo), den(-diff_lo));  // ceil
        Int o_hi = floor_div(num(diff_hi), den(diff_hi));
        return std::pair<Int, Int>(o_lo, o_hi);
    };
    auto [o0_lo, o0_hi] = offsets_for(t0, delta0);
    auto [o1_lo, o1_hi] = offsets_for(t1, delta1);

    IntMatrix H = IntMatrix::from_columns({t0.functional(), t1.functional()}, 2).transposed();

    // cleaning jump: push the candidate into the semigroup along w (which fixes
    // the level of `fixed`) using the exact row position threshold
    auto cleaned = [&](const QVec& candidate, const ZVec& w, const FacetRowTable& fixed,
                       const FacetRowTable& moving) -> std::optional<QVec> {
        if (!is_integral(candidate)) return std::nullopt;  // only integral classes have point resonances
        ZVec cz = to_zvec(candidate);
        Rat moving_level = dot(moving.functional(), candidate);
        if (!is_integer(moving_level) || to_int(moving_level) < Int(moving.stable_level()))
            return std::nullopt;  // level class would change under the jump
        Int s = dot(fixed.functional(), cz);
        long rho = fixed.position_residue(cz);
        auto threshold = fixed.position_threshold(s, rho);
        if (!threshold) return std::nullopt;
        Int pos = fixed.position_of(cz);
        Int step = fixed.position_of(w);  // positive multiple of gamma
        if (step <= 0) return std::nullopt;
        Int m = pos >= *threshold ? Int(0) : floor_div(*threshold - pos + step - 1, step);
        for (Int extra = 0; extra <= Int(cfg.walk_cap); ++extra) {
            QVec probe = candidate;
            Int mult = m + extra;
            for (int i = 0; i < 2; ++i) probe[i] += Rat(mult * w[i]);
            if (eval(probe).ok()) return probe;
        }
        return std::nullopt;
    };

    for (Int o0 = o0_lo; o0 <= o0_hi; ++o0) {
        for (Int o1 = o1_lo; o1 <= o1_hi; ++o1) {
            auto z = solve_integer(H, {o0, o1});
            if (!z) continue;
            QVec candidate = base + to_qvec(*z);
            D2CheckOutcome res = eval(candidate);
            if (res.ok()) return {std::optional<QVec>(candidate)};
            if (res.cleanable()) {
                if (auto fixed = cleaned(candidate, w0, t1, t0)) return {fixed};
                if (auto fixed = cleaned(candidate, w1, t0, t1)) return {fixed};
            }
        }
    }
    return {std::optional<QVec>()};  // decided: no candidate exists
}

MgmVerdict Classifier::is_mixed_gauss_manin(const QVec& beta, const ClassifierConfig& cfg) const {
    SearchBudget budget{cfg.budget, 0};
    const GkzDatum& dat = datum();
    MgmVerdict out;

    std::vector<FaceRequirement> reqs;
    for (int id = 0; id < dat.face_count(); ++id) {
        CosetSet s = ef_set(*oracle_, id, beta, budget);
        if (!s.empty()) reqs.push_back({id, s.representatives});
    }

    QVec eps = to_qvec(dat.epsilon());
    auto attempt = [&](const QVec& candidate, const char* stage) -> bool {
        if (!candidate_ok(candidate, reqs, budget)) return false;
        out.verdict = TriState::True;
        out.witness = candidate;
        out.stage = stage;
        return true;
    };

    for (int k = 0; k <= cfg.kmax; ++k) {
        QVec cand = beta;
        for (int i = 0; i < dat.dim(); ++i) cand[i] += Rat(k) * Rat(eps[i]);
        if (attempt(cand, "epsilon-translate")) return out;
    }

    if (dat.is_normal()) {
        // jump straight past every negative integral support value
        Int k0 = 0;
        for (const auto& sf : dat.facets()) {
            Rat v = dot(sf.row, beta);
            if (!is_integer(v) || v >= 0) continue;
            Int he = dot(sf.row, dat.epsilon());
            Int need = floor_div(-to_int(v) + he - 1, he);
            k0 = std::max(k0, need);
        }
        for (Int k = k0; k <= k0 + 2; ++k) {
            QVec cand = beta;
            for (int i = 0; i < dat.dim(); ++i) cand[i] += Rat(k) * Rat(eps[i]);
            if (attempt(cand, "epsilon-translate-far")) return out;
        }
    }

    {
        std::vector<ZVec> boxpts;
        ZVec z(dat.dim(), Int(-cfg.box_radius));
        while (true) {
            QVec cand = beta + to_qvec(z);
            if (attempt(cand, "integer-box")) return out;
            int i = dat.dim() - 1;
            while (i >= 0) {
                if (++z[i] <= Int(cfg.box_radius)) break;
                z[i] = Int(-cfg.box_radius);
                --i;
            }
            if (i < 0) break;
        }
    }

    if (dat.dim() == 1) {
        for (int k = cfg.kmax + 1; k <= cfg.kmax + 512; ++k) {
            QVec cand = beta;
            for (int i = 0; i < dat.dim(); ++i) cand[i] += Rat(k) * Rat(eps[i]);
            if (attempt(cand, "epsilon-translate-deep")) return out;
        }
        out.verdict = TriState::Unknown;
        out.note = "deep translate search exhausted";
        return out;
    }

    if (auto decided = d2_decide(beta, reqs, cfg, budget)) {
        if (*decided) {
            out.verdict = TriState::True;
            out.witness = **decided;
            out.stage = "structured";
            return out;
        }
        // no single parameter matches every face; decide the per-face condition
        for (const auto& req : reqs) {
            auto one = d2_decide(beta, {req}, cfg, budget);
            if (one && !*one) {
                out.verdict = TriState::False;
                out.note = "no non-resonant translate matches E along face " +
                           dat.face_name(req.face_id);
                return out;
            }
        }
        out.verdict = TriState::True;
        out.note = "matched face by face; no common witness exists";
        return out;
    }

    out.verdict = TriState::Unknown;
    out.note = "witness search exhausted; no exact backend for this datum";
    return out;
}

MgmVerdict Classifier::is_dual_mixed_gauss_manin(const QVec& beta, const ClassifierConfig& cfg) const {
    SearchBudget budget{cfg.budget, 0};
    const GkzDatum& dat = datum();
    MgmVerdict out;

    if (lc_->exceptional_contains(beta, budget)) {
        out.verdict = TriState::False;
        out.note = "parameter lies in the exceptional set";
        return out;
    }

    // requirements are expressed for delta = -beta'; E*_F(beta) must equal
    // -E_F(delta) for every face with E*_F(beta) nonempty
    std::vector<FaceRequirement> reqs;
    for (int id = 0; id < dat.face_count(); ++id) {
        CosetSet s = lc_->estar_set(id, beta, budget);
        if (!s.empty()) reqs.push_back({id, negated_canonical(s)});
    }

    QVec eps = to_qvec(dat.epsilon());
    QVec minus_beta = Rat(-1) * beta;

    auto attempt = [&](const QVec& delta, const char* stage) -> bool {
        if (!candidate_ok(delta, reqs, budget)) return false;
        out.verdict = TriState::True;
        out.witness = Rat(-1) * delta;  // beta' with beta - beta' integral
        out.stage = stage;
        return true;
    };

    for (int k = 0; k <= cfg.kmax; ++k) {
        QVec delta = minus_beta;
        for (int i = 0; i < dat.dim(); ++i) delta[i] += Rat(k) * Rat(eps[i]);
        if (attempt(delta, "epsilon-translate")) return out;
    }

    if (dat.is_normal()) {
        Int k0 = 0;
        for (const auto& sf : dat.facets()) {
            Rat v = dot(sf.row, minus_beta);
            if (!is_integer(v) || v >= 0) continue;
            Int he = dot(sf.row, dat.epsilon());
            Int need = floor_div(-to_int(v) + he - 1, he);
            k0 = std::max(k0, need);
        }
        for (Int k = k0; k <= k0 + 2; ++k) {
            QVec delta = minus_beta;
            for (int i = 0; i < dat.dim(); ++i) delta[i] += Rat(k) * Rat(eps[i]);
            if (attempt(delta, "epsilon-translate-far")) return out;
        }
    }

    {
        ZVec z(dat.dim(), Int(-cfg.box_radius));
        while (true) {
            QVec delta = minus_beta + to_qvec(z);
            if (attempt(delta, "integer-box")) return out;
            int i = dat.dim() - 1;
            while (i >= 0) {
                if (++z[i] <= Int(cfg.box_radius)) break;
                z[i] = Int(-cfg.box_radius);
                --i;
            }
            if (i < 0) break;
        }
    }

    if (dat.dim() == 1) {
        for (int k = cfg.kmax + 1; k <= cfg.kmax + 512; ++k) {
            QVec delta = minus_beta;
            for (int i = 0; i < dat.dim(); ++i) delta[i] += Rat(k) * Rat(eps[i]);
            if (attempt(delta, "epsilon-translate-deep")) return out;
        }
        out.verdict = TriState::Unknown;
        out.note = "deep translate search exhausted";
        return out;
    }

    if (auto decided = d2_decide(minus_beta, reqs, cfg, budget)) {
        if (*decided) {
            out.verdict = TriState::True;
            out.witness = Rat(-1) * (**decided);
            out.stage = "structured";
            return out;
        }
        for (const auto& req : reqs) {
            auto one = d2_decide(minus_beta, {req}, cfg, budget);
            if (one && !*one) {
                out.verdict = TriState::False;
                out.note = "no admissible translate matches E* along face " +
                           dat.face_name(req.face_id);
                return out;
            }
        }
        out.verdict = TriState::True;
        out.note = "matched face by face; no common witness exists";
        return out;
    }

    out.verdict = TriState::Unknown;
    out.note = "witness search exhausted; no exact backend for this datum";
    return out;
}

ClassificationReport Classifier::classify(const QVec& beta, const ClassifierConfig& cfg) const {
    const GkzDatum& dat = datum();
    ClassificationReport rep;
    rep.beta = beta;

    auto guarded = [&](auto&& fn) {
        SearchBudget budget{cfg.budget, 0};
        try {
            fn(budget);
        } catch (const BudgetExceeded&) {
            rep.budget_exhausted = true;
        }
    };

    guarded([&](SearchBudget& b) {
        rep.per_face.resize(dat.face_count());
        for (int id = 0; id < dat.face_count(); ++id) {
            rep.per_face[id].ef = ef_set(*oracle_, id, beta, b);
            rep.per_face[id].estar = lc_->estar_set(id, beta, b);
        }
        for (int id = 0; id < dat.face_count(); ++id) {
            if (!rep.per_face[id].estar.empty()) rep.fiber.faces.push_back(id);
            if (!rep.per_face[id].ef.empty()) rep.cofiber.faces.push_back(id);
        }
    });
    guarded([&](SearchBudget& b) { rep.in_exceptional = lc_->exceptional_contains(beta, b); });
    guarded([&](SearchBudget& b) { rep.sres = sres_->contains(beta, b); });

    try {
        rep.open_u = open_set_description(dat, rep.fiber);
    } catch (const NotClosedComplement& e) {
        rep.open_u_error = e.what();
    }
    try {
        rep.open_v = open_set_description(dat, rep.cofiber);
    } catch (const NotClosedComplement& e) {
        rep.open_v_error = e.what();
    }

    try {
        rep.mixed = is_mixed_gauss_manin(beta, cfg);
    } catch (const BudgetExceeded&) {
        rep.budget_exhausted = true;
        rep.mixed.verdict = TriState::Unknown;
        rep.mixed.note = "budget exceeded";
    }
    try {
        rep.dual_mixed = is_dual_mixed_gauss_manin(beta, cfg);
    } catch (const BudgetExceeded&) {
        rep.budget_exhausted = true;
        rep.dual_mixed.verdict = TriState::Unknown;
        rep.dual_mixed.note = "budget exceeded";
    }
    return rep;
}

bool Classifier::validate_mixed_witness(const QVec& beta, const QVec& witness,
                                        SearchBudget& budget) const {
    if (!is_integral(witness - beta)) return false;
    if (sres_->contains(witness, budget) != TriState::False) return false;
    for (int id = 0; id < datum().face_count(); ++id) {
        CosetSet at_beta = ef_set(*oracle_, id, beta, budget);
        if (at_beta.empty()) continue;
        CosetSet at_witness = ef_set(*oracle_, id, witness, budget);
        if (!(at_beta == at_witness)) return false;
    }
    return true;
}

bool Classifier::validate_dual_witness(const QVec& beta, const QVec& witness,
                                       SearchBudget& budget) const {
    if (!is_integral(witness - beta)) return false;
    if (lc_->exceptional_contains(beta, budget)) return false;
    QVec delta = Rat(-1) * witness;
    if (sres_->contains(delta, budget) != TriState::False) return false;
    for (int id = 0; id < datum().face_count(); ++id) {
        CosetSet star = lc_->estar_set(id, beta, budget);
        if (star.empty()) continue;
        CosetSet at_delta = ef_set(*oracle_, id, delta, budget);
        if (negated_canonical(at_delta) != star.representatives) return false;
    }
    return true;
}

} // namespace gkz
