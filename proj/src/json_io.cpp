#include "gkz/json_io.hpp"

#include <sstream>

namespace gkz {

namespace {

Rat rational_from_json(const json& v) {
    if (v.is_number_integer()) return Rat(Int(v.get<long long>()));
    if (v.is_string()) return parse_rational(v.get<std::string>());
    throw ParseError("expected an integer or a rational string, got " + v.dump());
}

QVec qvec_from_json(const json& v, int dim) {
    if (!v.is_array() || int(v.size()) != dim)
        throw ParseError("expected a vector of length " + std::to_string(dim) + ", got " + v.dump());
    QVec out(dim);
    for (int i = 0; i < dim; ++i) out[i] = rational_from_json(v[i]);
    return out;
}

json qvec_to_json(const QVec& v) {
    json a = json::array();
    for (const auto& q : v) a.push_back(to_string(q));
    return a;
}

json verdict_to_json(const MgmVerdict& v) {
    json j;
    j["verdict"] = to_string(v.verdict);
    if (v.witness) j["witness"] = qvec_to_json(*v.witness);
    if (!v.stage.empty()) j["stage"] = v.stage;
    if (!v.note.empty()) j["note"] = v.note;
    return j;
}

MgmVerdict verdict_from_json(const json& j) {
    MgmVerdict v;
    std::string s = j.at("verdict").get<std::string>();
    v.verdict = s == "yes" ? TriState::True : (s == "no" ? TriState::False : TriState::Unknown);
    if (j.contains("witness")) {
        const json& w = j["witness"];
        QVec q(w.size());
        for (size_t i = 0; i < w.size(); ++i) q[i] = rational_from_json(w[i]);
        v.witness = q;
    }
    if (j.contains("stage")) v.stage = j["stage"].get<std::string>();
    if (j.contains("note")) v.note = j["note"].get<std::string>();
    return v;
}

} // namespace

ParsedInput parse_input(std::istream& in) {
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed JSON input: ") + e.what());
    }
    return parse_input_json(j);
}

ParsedInput parse_input_json(const json& j) {
    ParsedInput out;
    if (!j.contains("A")) throw ParseError("input is missing the matrix field \"A\"");
    const json& A = j["A"];
    if (!A.is_array() || A.empty() || !A[0].is_array())
        throw ParseError("field \"A\" must be a non-empty array of rows");
    int d = int(A.size()), n = int(A[0].size());
    out.A = IntMatrix(d, n);
    for (int i = 0; i < d; ++i) {
        if (int(A[i].size()) != n) throw ParseError("ragged matrix in field \"A\"");
        for (int k = 0; k < n; ++k) {
            if (!A[i][k].is_number_integer())
                throw ParseError("matrix entries must be integers, got " + A[i][k].dump());
            out.A.at(i, k) = Int(A[i][k].get<long long>());
        }
    }
    if (j.contains("beta"))
        for (const auto& b : j["beta"]) out.betas.push_back(qvec_from_json(b, d));
    if (j.contains("beta_box")) {
        const json& box = j["beta_box"];
        ZVec lo(d), hi(d);
        for (int i = 0; i < d; ++i) {
            lo[i] = Int(box.at("lo").at(i).get<long long>());
            hi[i] = Int(box.at("hi").at(i).get<long long>());
            if (lo[i] > hi[i]) throw ParseError("beta_box has lo > hi");
        }
        ZVec z = lo;
        while (true) {
            out.betas.push_back(to_qvec(z));
            int i = d - 1;
            while (i >= 0) {
                if (++z[i] <= hi[i]) break;
                z[i] = lo[i];
                --i;
            }
            if (i < 0) break;
        }
    }
    if (j.contains("config")) {
        const json& c = j["config"];
        if (c.contains("budget")) out.config.budget = c["budget"].get<std::uint64_t>();
        if (c.contains("kmax")) out.config.kmax = c["kmax"].get<int>();
        if (c.contains("box_radius")) out.config.box_radius = c["box_radius"].get<int>();
    }
    return out;
}

QVec parse_beta_csv(const std::string& csv, int dim) {
    QVec out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(parse_rational(tok));
    if (int(out.size()) != dim)
        throw ParseError("expected " + std::to_string(dim) + " coordinates, got " +
                         std::to_string(out.size()));
    return out;
}

std::vector<int> parse_face_arg(const std::string& arg, const GkzDatum& datum) {
    if (arg == "empty" || arg == "none" || arg.empty()) return {};
    if (arg == "full" || arg == "A") return datum.face(datum.full_face_id()).indices;
    std::vector<int> idx;
    std::stringstream ss(arg);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        int v = std::stoi(tok);
        if (v < 1 || v > datum.ncols()) throw ParseError("column index out of range: " + tok);
        idx.push_back(v - 1);
    }
    std::sort(idx.begin(), idx.end());
    idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
    return idx;
}

json coset_set_to_json(const GkzDatum& datum, const CosetSet& s) {
    json j;
    j["face"] = datum.face_name(s.face_id);
    json reps = json::array();
    for (const auto& r : s.representatives) reps.push_back(qvec_to_json(r));
    j["representatives"] = reps;
    return j;
}

json support_to_json(const GkzDatum& datum, const OrbitSupport& s) {
    json j = json::array();
    for (int id : s.faces) j.push_back(datum.face_name(id));
    return j;
}

json report_to_json(const GkzDatum& datum, const ClassificationReport& rep) {
    json j;
    j["beta"] = qvec_to_json(rep.beta);
    json faces = json::array();
    for (int id = 0; id < int(rep.per_face.size()); ++id) {
        json f;
        f["face"] = datum.face_name(id);
        f["E"] = coset_set_to_json(datum, rep.per_face[id].ef)["representatives"];
        f["Estar"] = coset_set_to_json(datum, rep.per_face[id].estar)["representatives"];
        faces.push_back(f);
    }
    j["per_face"] = faces;
    j["fiber_support"] = support_to_json(datum, rep.fiber);
    j["cofiber_support"] = support_to_json(datum, rep.cofiber);
    j["exceptional"] = rep.in_exceptional;
    j["strongly_resonant"] = to_string(rep.sres);
    j["mixed_gauss_manin"] = verdict_to_json(rep.mixed);
    j["dual_mixed_gauss_manin"] = verdict_to_json(rep.dual_mixed);
    if (rep.open_u) {
        json u;
        u["rendering"] = rep.open_u->rendering;
        json ex = json::array();
        for (int id : rep.open_u->excluded_maximal_faces) ex.push_back(datum.face_name(id));
        u["excluded_maximal_faces"] = ex;
        u["ideals"] = rep.open_u->ideal_descriptions;
        j["U"] = u;
    } else {
        j["U_error"] = rep.open_u_error;
    }
    if (rep.open_v) {
        json v;
        v["rendering"] = rep.open_v->rendering;
        json ex = json::array();
        for (int id : rep.open_v->excluded_maximal_faces) ex.push_back(datum.face_name(id));
        v["excluded_maximal_faces"] = ex;
        v["ideals"] = rep.open_v->ideal_descriptions;
        j["V"] = v;
    } else {
        j["V_error"] = rep.open_v_error;
    }
    if (rep.budget_exhausted) j["budget_exhausted"] = true;
    return j;
}

ClassificationReport report_from_json(const GkzDatum& datum, const json& j) {
    ClassificationReport rep;
    int d = datum.dim();
    rep.beta = qvec_from_json(j.at("beta"), d);
    rep.per_face.resize(datum.face_count());
    for (int id = 0; id < datum.face_count(); ++id) {
        const json& f = j.at("per_face").at(id);
        if (f.at("face").get<std::string>() != datum.face_name(id))
            throw ParseError("face table does not match the datum");
        FaceData fd;
        fd.ef.face_id = id;
        fd.ef.modulus = datum.face_lattice(id);
        for (const auto& r : f.at("E")) fd.ef.representatives.push_back(qvec_from_json(r, d));
        fd.estar.face_id = id;
        fd.estar.modulus = datum.face_lattice(id);
        for (const auto& r : f.at("Estar")) fd.estar.representatives.push_back(qvec_from_json(r, d));
        rep.per_face[id] = fd;
        if (!fd.estar.empty()) rep.fiber.faces.push_back(id);
        if (!fd.ef.empty()) rep.cofiber.faces.push_back(id);
    }
    rep.in_exceptional = j.at("exceptional").get<bool>();
    std::string s = j.at("strongly_resonant").get<std::string>();
    rep.sres = s == "yes" ? TriState::True : (s == "no" ? TriState::False : TriState::Unknown);
    rep.mixed = verdict_from_json(j.at("mixed_gauss_manin"));
    rep.dual_mixed = verdict_from_json(j.at("dual_mixed_gauss_manin"));
    if (j.contains("U"))
        rep.open_u = open_set_description(datum, rep.fiber);
    else
        rep.open_u_error = j.value("U_error", "");
    if (j.contains("V"))
        rep.open_v = open_set_description(datum, rep.cofiber);
    else
        rep.open_v_error = j.value("V_error", "");
    rep.budget_exhausted = j.value("budget_exhausted", false);
    return rep;
}

json datum_to_json(const GkzDatum& datum) {
    json j;
    json rows = json::array();
    for (int i = 0; i < datum.dim(); ++i) {
        json r = json::array();
        for (int k = 0; k < datum.ncols(); ++k) r.push_back(datum.matrix().at(i, k).str());
        rows.push_back(r);
    }
    j["A"] = rows;
    json faces = json::array();
    for (int id = 0; id < datum.face_count(); ++id) {
        json f;
        f["name"] = datum.face_name(id);
        f["rank"] = datum.face(id).rank;
        json w = json::array();
        for (const auto& x : datum.face(id).witness) w.push_back(x.str());
        f["witness"] = w;
        faces.push_back(f);
    }
    j["faces"] = faces;
    json facets = json::array();
    for (const auto& sf : datum.facets()) {
        json f;
        f["face"] = datum.face_name(sf.facet_id);
        json h = json::array();
        for (const auto& x : sf.row) h.push_back(x.str());
        f["support_function"] = h;
        facets.push_back(f);
    }
    j["facets"] = facets;
    j["normal"] = datum.is_normal();
    json eps = json::array();
    for (const auto& x : datum.epsilon()) eps.push_back(x.str());
    j["epsilon"] = eps;
    return j;
}

} // namespace gkz
