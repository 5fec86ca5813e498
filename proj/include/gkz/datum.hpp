#pragma once

#include "gkz/lattice.hpp"
#include "gkz/linprog.hpp"

#include <map>
#include <memory>
#include <set>
#include <string>

namespace gkz {

// A face F of the cone over the columns of A, stored as a saturated sorted set
// of column indices together with a certifying functional (zero on F, positive
// off F; the zero functional for F = A).
struct Face {
    std::vector<int> indices;
    int rank = 0;
    ZVec witness;

    bool contains(const Face& other) const {
        return std::includes(indices.begin(), indices.end(),
                             other.indices.begin(), other.indices.end());
    }
    bool operator==(const Face& o) const { return indices == o.indices; }
    bool operator<(const Face& o) const {
        if (rank != o.rank) return rank < o.rank;
        return indices < o.indices;
    }
};

struct SupportFunction {
    ZVec row;      // primitive, >= 0 on all columns, zero exactly on the facet
    int facet_id;  // index into GkzDatum::faces
};

class GkzDatum {
public:
    explicit GkzDatum(const IntMatrix& A);

    const IntMatrix& matrix() const { return A_; }
    int dim() const { return A_.rows(); }
    int ncols() const { return A_.cols(); }
    const ZVec& epsilon() const { return epsilon_; }

    const std::vector<Face>& faces() const { return faces_; }
    const Face& face(int id) const { return faces_.at(id); }
    int face_count() const { return int(faces_.size()); }
    int full_face_id() const { return int(faces_.size()) - 1; }
    int empty_face_id() const { return 0; }

    // id of the face with exactly these column indices; throws UnknownFace
    int face_id(const std::vector<int>& sorted_indices) const;

    const std::vector<SupportFunction>& facets() const { return facets_; }
    const SupportFunction& support_function(int facet_face_id) const;

    std::vector<int> faces_containing(int face_id) const;
    bool face_leq(int sub, int sup) const { return faces_[sup].contains(faces_[sub]); }

    // column span of the face, as a d x rank integer matrix
    IntMatrix face_span_basis(int face_id) const;
    const Lattice& face_lattice(int face_id) const { return zf_[face_id]; }           // ZF
    const Lattice& saturated_face_lattice(int face_id) const { return zd_cf_[face_id]; } // Z^d within CF

    bool is_normal() const;

    std::string face_name(int face_id) const;  // "[a1,a3]", "[]" for the empty face

private:
    IntMatrix A_;
    ZVec epsilon_;
    std::vector<Face> faces_;
    std::vector<SupportFunction> facets_;  // one per rank d-1 face
    std::map<std::vector<int>, int> face_index_;
    std::vector<Lattice> zf_, zd_cf_;
    mutable int normal_cache_ = -1;  // -1 unknown, else 0/1
};

std::shared_ptr<GkzDatum> build_datum(const IntMatrix& A);

} // namespace gkz
