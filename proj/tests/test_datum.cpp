#include "doctest.h"

#include "gkz/fixtures.hpp"
#include "oracles.hpp"

using namespace gkz;

TEST_CASE("faces of the normal two-facet example") {
    auto dat = build_datum(fixtures::matrix("111-012"));
    REQUIRE(dat->face_count() == 4);
    CHECK(dat->face(0).indices.empty());
    CHECK(dat->face(1).indices == std::vector<int>{0});
    CHECK(dat->face(2).indices == std::vector<int>{2});
    CHECK(dat->face(3).indices == std::vector<int>{0, 1, 2});

    CHECK(dat->support_function(1).row == ZVec{Int(0), Int(1)});
    CHECK(dat->support_function(2).row == ZVec{Int(2), Int(-1)});
    CHECK(dat->epsilon() == ZVec{Int(3), Int(3)});
}

TEST_CASE("construction rejects bad input") {
    CHECK_THROWS_AS(build_datum(IntMatrix{{1, -1}}), NotPointed);
    CHECK_THROWS_AS(build_datum(IntMatrix{{2}}), LatticeNotSpanned);
    CHECK_THROWS_AS(build_datum(IntMatrix{{1, 0}, {0, 0}}), LatticeNotSpanned);
    CHECK_THROWS_AS(build_datum(IntMatrix{{1, 0}, {1, 0}}), ZeroColumn);
}

TEST_CASE("support function of an interior-column example") {
    auto dat = build_datum(IntMatrix{{1, 1, 0}, {0, 1, 2}});
    // facet through column 3 = (0,2)
    int f3 = dat->face_id({2});
    CHECK(dat->support_function(f3).row == ZVec{Int(1), Int(0)});
    int f1 = dat->face_id({0});
    CHECK(dat->support_function(f1).row == ZVec{Int(0), Int(1)});
    CHECK_THROWS_AS(dat->support_function(dat->full_face_id()), NotAFacet);
}

TEST_CASE("hilbert basis style fixture has the stated support functions") {
    auto dat = build_datum(fixtures::matrix("zzd"));
    REQUIRE(dat->face_count() == 4);
    int g1 = dat->face_id({3});  // column (2,3)
    int g2 = dat->face_id({0});  // column (2,-1)
    CHECK(dat->support_function(g1).row == ZVec{Int(3), Int(-2)});
    CHECK(dat->support_function(g2).row == ZVec{Int(1), Int(2)});
    CHECK(dat->is_normal());
}

TEST_CASE("normality of the fixtures") {
    CHECK(!build_datum(fixtures::matrix("8isoms"))->is_normal());
    CHECK(build_datum(fixtures::matrix("111-012"))->is_normal());
    CHECK(build_datum(IntMatrix::identity(3))->is_normal());
    CHECK(!build_datum(fixtures::matrix("five-col"))->is_normal());
}

TEST_CASE("faces containing") {
    auto dat = build_datum(fixtures::matrix("111-012"));
    CHECK(dat->faces_containing(0).size() == 4);
    CHECK(dat->faces_containing(1) == std::vector<int>{1, 3});
    CHECK(dat->faces_containing(3) == std::vector<int>{3});
}

TEST_CASE("five column fixture face lattice") {
    auto dat = build_datum(fixtures::matrix("five-col"));
    CHECK(dat->face_count() == 8);
    int zaxis = dat->face_id({4});
    CHECK(dat->face(zaxis).rank == 1);
    CHECK(dat->face_name(zaxis) == "[a5]");
}

TEST_CASE("face witnesses certify their faces") {
    std::mt19937 rng(101);
    for (int t = 0; t < 40; ++t) {
        auto dat = testing::random_datum(rng, 3, 5, 3);
        for (int id = 0; id < dat->face_count(); ++id) {
            const Face& f = dat->face(id);
            for (int j = 0; j < dat->ncols(); ++j) {
                Int v = dot(f.witness, dat->matrix().column(j));
                if (std::binary_search(f.indices.begin(), f.indices.end(), j)) {
                    CHECK(v == 0);
                } else {
                    CHECK(v > 0);
                }
            }
        }
    }
}

TEST_CASE("support function axioms hold for every facet") {
    std::mt19937 rng(757);
    for (int t = 0; t < 100; ++t) {
        auto dat = testing::random_datum(rng, 3, 6, 3);
        int facet_count = 0;
        for (int id = 0; id < dat->face_count(); ++id)
            if (dat->face(id).rank == dat->dim() - 1) ++facet_count;
        CHECK(facet_count == int(dat->facets().size()));
        for (const auto& sf : dat->facets()) {
            Int g = 0;
            for (const auto& x : sf.row) g = gcd_int(g, x);
            CHECK(g == 1);
            const Face& facet = dat->face(sf.facet_id);
            for (int j = 0; j < dat->ncols(); ++j) {
                Int v = dot(sf.row, dat->matrix().column(j));
                CHECK(v >= 0);
                bool on = std::binary_search(facet.indices.begin(), facet.indices.end(), j);
                CHECK((v == 0) == on);
            }
        }
        // the face set is closed under intersection
        for (int a = 0; a < dat->face_count(); ++a)
            for (int b = a + 1; b < dat->face_count(); ++b) {
                std::vector<int> meet;
                std::set_intersection(dat->face(a).indices.begin(), dat->face(a).indices.end(),
                                      dat->face(b).indices.begin(), dat->face(b).indices.end(),
                                      std::back_inserter(meet));
                CHECK_NOTHROW(dat->face_id(meet));
            }
    }
}

TEST_CASE("normality agrees with a hilbert basis oracle") {
    std::mt19937 rng(909);
    for (int t = 0; t < 40; ++t) {
        auto dat = testing::random_datum(rng, 2, 4, 3);
        // saturation witnesses: zonotope points are in the cone; the semigroup is
        // normal iff they all belong to it
        bool normal = true;
        for (const ZVec& z : zonotope_lattice_points(dat->matrix()))
            if (!in_nonneg_span(dat->matrix(), z).inside) { normal = false; break; }
        CHECK(normal == dat->is_normal());
    }
}
