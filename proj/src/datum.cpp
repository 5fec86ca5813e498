#include "gkz/datum.hpp"

#include "gkz/membership.hpp"

#include <algorithm>

namespace gkz {

namespace {

std::vector<int> saturated_zero_set(const IntMatrix& A, const ZVec& h) {
    std::vector<int> idx;
    for (int j = 0; j < A.cols(); ++j)
        if (dot(h, A.column(j)) == 0) idx.push_back(j);
    return idx;
}

// all (rank-1)-subsets are too many to matter at this scale; enumerate subsets of
// size d-1 and keep those whose kernel functional supports the cone
std::vector<ZVec> facet_functionals(const IntMatrix& A) {
    int d = A.rows(), n = A.cols();
    std::set<ZVec> found;
    std::vector<int> comb(std::max(d - 1, 0));
    std::vector<int> pool(n);
    for (int i = 0; i < n; ++i) pool[i] = i;

    auto consider = [&](const std::vector<int>& subset) {
        IntMatrix S = A.select_columns(subset);
        IntMatrix K = kernel_lattice(S.transposed());
        if (K.cols() != 1) return;  // subset does not span a hyperplane
        ZVec h = primitive_vector(K.column(0));
        bool pos = false, neg = false;
        for (int j = 0; j < n; ++j) {
            int s = sgn(dot(h, A.column(j)));
            if (s > 0) pos = true;
            if (s < 0) neg = true;
        }
        if (pos && neg) return;
        if (neg) h = negate(h);
        if (!pos && !neg) return;  // functional vanishes on all columns; rank < d handled elsewhere
        found.insert(h);
    };

    if (d == 1) {
        consider({});
    } else {
        std::vector<bool> mask(n, false);
        std::fill(mask.begin(), mask.begin() + (d - 1), true);
        std::sort(mask.begin(), mask.end());
        // iterate all (d-1)-subsets
        std::vector<int> subset;
        std::function<void(int)> rec = [&](int start) {
            if (int(subset.size()) == d - 1) {
                consider(subset);
                return;
            }
            for (int i = start; i < n; ++i) {
                subset.push_back(i);
                rec(i + 1);
                subset.pop_back();
            }
        };
        rec(0);
    }
    return {found.begin(), found.end()};
}

} // namespace

GkzDatum::GkzDatum(const IntMatrix& A) : A_(A) {
    int d = A.rows(), n = A.cols();
    if (d == 0 || n == 0) throw Error("empty matrix");
    for (int j = 0; j < n; ++j)
        if (is_zero(A.column(j))) throw ZeroColumn("column " + std::to_string(j + 1) + " is zero");

    SmithForm S = smith_normal_form(A);
    if (S.rank < d) throw LatticeNotSpanned("columns do not span a rank-" + std::to_string(d) + " lattice");
    for (int i = 0; i < d; ++i)
        if (S.D.at(i, i) != 1)
            throw LatticeNotSpanned("lattice of the columns has index " + S.D.at(i, i).str() + " in Z^d");

    if (!find_positive_functional(A))
        throw NotPointed("no strictly positive functional on the columns exists");

    epsilon_.assign(d, Int(0));
    for (int j = 0; j < n; ++j) epsilon_ = epsilon_ + A.column(j);

    // facets via dual description
    std::vector<ZVec> hs = facet_functionals(A);
    std::map<std::vector<int>, ZVec> facet_sets;
    for (const auto& h : hs) facet_sets[saturated_zero_set(A, h)] = h;

    // close the facet column sets under intersection
    std::set<std::vector<int>> sets;
    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) all[i] = i;
    sets.insert(all);
    for (const auto& [fs, h] : facet_sets) sets.insert(fs);
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::vector<int>> cur(sets.begin(), sets.end());
        for (size_t i = 0; i < cur.size(); ++i)
            for (size_t j = i + 1; j < cur.size(); ++j) {
                std::vector<int> meet;
                std::set_intersection(cur[i].begin(), cur[i].end(), cur[j].begin(), cur[j].end(),
                                      std::back_inserter(meet));
                if (sets.insert(meet).second) grew = true;
            }
    }

    for (const auto& s : sets) {
        Face f;
        f.indices = s;
        f.rank = s.empty() ? 0 : rank_of(A.select_columns(s));
        faces_.push_back(f);
    }
    std::sort(faces_.begin(), faces_.end());
    for (int id = 0; id < int(faces_.size()); ++id) face_index_[faces_[id].indices] = id;

    // witnesses: sum of the facet functionals containing the face
    for (auto& f : faces_) {
        ZVec w(d, Int(0));
        for (const auto& [fs, h] : facet_sets) {
            if (std::includes(fs.begin(), fs.end(), f.indices.begin(), f.indices.end()))
                w = w + h;
        }
        f.witness = w;
    }

    for (const auto& [fs, h] : facet_sets) {
        int id = face_index_.at(fs);
        if (faces_[id].rank != d - 1)
            throw Error("internal error: facet of unexpected rank");
        facets_.push_back({h, id});
    }
    std::sort(facets_.begin(), facets_.end(),
              [](const SupportFunction& a, const SupportFunction& b) { return a.facet_id < b.facet_id; });

    // per-face lattices
    zf_.resize(faces_.size());
    zd_cf_.resize(faces_.size());
    for (int id = 0; id < int(faces_.size()); ++id) {
        IntMatrix span = face_span_basis(id);
        zf_[id] = Lattice(A.select_columns(faces_[id].indices));
        if (faces_[id].indices.empty()) {
            zd_cf_[id] = Lattice::zero(d);
        } else {
            IntMatrix N = kernel_lattice(span.transposed()).transposed();
            zd_cf_[id] = (N.rows() == 0) ? Lattice::full(d) : Lattice(kernel_lattice(N));
        }
    }
}

int GkzDatum::face_id(const std::vector<int>& sorted_indices) const {
    auto it = face_index_.find(sorted_indices);
    if (it == face_index_.end()) throw UnknownFace("no face with the given column set");
    return it->second;
}

const SupportFunction& GkzDatum::support_function(int facet_face_id) const {
    for (const auto& sf : facets_)
        if (sf.facet_id == facet_face_id) return sf;
    throw NotAFacet("face is not a facet");
}

std::vector<int> GkzDatum::faces_containing(int face_id) const {
    if (face_id < 0 || face_id >= int(faces_.size())) throw UnknownFace("bad face id");
    std::vector<int> out;
    for (int id = 0; id < int(faces_.size()); ++id)
        if (faces_[id].contains(faces_[face_id])) out.push_back(id);
    return out;
}

IntMatrix GkzDatum::face_span_basis(int face_id) const {
    const Face& f = faces_.at(face_id);
    std::vector<ZVec> basis;
    IntMatrix sel = A_.select_columns(f.indices);
    // greedy rank extension in column-index order
    std::vector<int> keep;
    for (int j = 0; j < sel.cols(); ++j) {
        keep.push_back(j);
        if (rank_of(sel.select_columns(keep)) < int(keep.size())) keep.pop_back();
    }
    return sel.select_columns(keep);
}

bool GkzDatum::is_normal() const {
    if (normal_cache_ >= 0) return normal_cache_ == 1;
    bool ok = true;
    for (const ZVec& z : zonotope_lattice_points(A_)) {
        if (!in_nonneg_span(A_, z).inside) {
            ok = false;
            break;
        }
    }
    normal_cache_ = ok ? 1 : 0;
    return ok;
}

std::string GkzDatum::face_name(int face_id) const {
    const Face& f = faces_.at(face_id);
    if (f.indices.empty()) return "[]";
    std::string s = "[";
    for (size_t k = 0; k < f.indices.size(); ++k) {
        if (k) s += ",";
        s += "a" + std::to_string(f.indices[k] + 1);
    }
    return s + "]";
}

std::shared_ptr<GkzDatum> build_datum(const IntMatrix& A) {
    return std::make_shared<GkzDatum>(A);
}

} // namespace gkz
