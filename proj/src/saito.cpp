#include "gkz/saito.hpp"

#include <algorithm>

namespace gkz {

CosetSet ef_set(const MembershipOracle& oracle, int face_id, const QVec& beta, SearchBudget& budget) {
    const GkzDatum& datum = oracle.datum();
    CosetSet out;
    out.face_id = face_id;
    out.modulus = datum.face_lattice(face_id);
    for (const QVec& lambda : face_degree_representatives(datum, face_id, beta)) {
        ZVec degree = to_zvec(beta - lambda);
        if (oracle.in_localized(face_id, degree, budget))
            out.representatives.push_back(lambda);
    }
    return out;
}

OrbitSupport fiber_support(const LocalCohomology& lc, const QVec& beta, SearchBudget& budget) {
    OrbitSupport s;
    for (int id = 0; id < lc.datum().face_count(); ++id)
        if (!lc.estar_set(id, beta, budget).empty()) s.faces.push_back(id);
    return s;
}

OrbitSupport cofiber_support(const MembershipOracle& oracle, const QVec& beta, SearchBudget& budget) {
    OrbitSupport s;
    for (int id = 0; id < oracle.datum().face_count(); ++id)
        if (!ef_set(oracle, id, beta, budget).empty()) s.faces.push_back(id);
    return s;
}

namespace {

std::string variety_name(const GkzDatum& datum, int face_id) {
    const Face& f = datum.face(face_id);
    if (f.indices.empty()) return "{0}";
    if (f.indices.size() == 1)
        return "∂" + std::to_string(f.indices.front() + 1) + "-axis";
    return "V(I^A_" + datum.face_name(face_id) + ")";
}

} // namespace

OpenSetDescription open_set_description(const GkzDatum& datum, const OrbitSupport& support) {
    std::vector<int> excluded;
    for (int id = 0; id < datum.face_count(); ++id)
        if (!support.contains(id)) excluded.push_back(id);

    // the complement must be a union of orbit closures
    for (int id : excluded)
        for (int sub = 0; sub < datum.face_count(); ++sub)
            if (datum.face_leq(sub, id) && support.contains(sub))
                throw NotClosedComplement("complement of the support is not closed: face " +
                                          datum.face_name(sub) + " lies under excluded face " +
                                          datum.face_name(id));

    OpenSetDescription out;
    for (int id : excluded) {
        bool maximal = true;
        for (int other : excluded)
            if (other != id && datum.face_leq(id, other)) { maximal = false; break; }
        if (maximal) out.excluded_maximal_faces.push_back(id);
    }

    for (int id : out.excluded_maximal_faces) {
        const Face& f = datum.face(id);
        std::string gens = "I_A";
        for (int j = 0; j < datum.ncols(); ++j)
            if (!std::binary_search(f.indices.begin(), f.indices.end(), j))
                gens += ", ∂" + std::to_string(j + 1);
        out.ideal_descriptions.push_back("<" + gens + ">");
    }

    std::string n = std::to_string(datum.ncols());
    if (out.excluded_maximal_faces.empty()) {
        out.rendering = "Ĉ^" + n;
    } else if (support.faces == std::vector<int>{datum.full_face_id()}) {
        out.rendering = "(C*)^" + n;
    } else {
        std::string parts;
        for (size_t k = 0; k < out.excluded_maximal_faces.size(); ++k) {
            if (k) parts += " ∪ ";
            parts += variety_name(datum, out.excluded_maximal_faces[k]);
        }
        out.rendering = "Ĉ^" + n + " ∖ {" + parts + "}";
    }
    return out;
}

std::string render_support(const GkzDatum& datum, const OrbitSupport& support) {
    bool all = int(support.faces.size()) == datum.face_count();
    if (all) return "X_A";
    std::string s;
    for (size_t k = 0; k < support.faces.size(); ++k) {
        if (k) s += " ∪ ";
        s += "O(" + datum.face_name(support.faces[k]) + ")";
    }
    return s.empty() ? "(empty)" : s;
}

} // namespace gkz
