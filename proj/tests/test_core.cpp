#include "doctest.h"

#include "gkz/lattice.hpp"
#include "gkz/linprog.hpp"

#include <random>

using namespace gkz;

namespace {

IntMatrix random_matrix(std::mt19937& rng, int m, int n, int bound) {
    std::uniform_int_distribution<int> e(-bound, bound);
    IntMatrix M(m, n);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) M.at(i, j) = e(rng);
    return M;
}

} // namespace

TEST_CASE("smith normal form on pinned inputs") {
    SmithForm s = smith_normal_form(IntMatrix{{2, 0}, {0, 3}});
    CHECK(s.D.at(0, 0) == 1);
    CHECK(s.D.at(1, 1) == 6);
    CHECK(s.rank == 2);

    SmithForm id3 = smith_normal_form(IntMatrix::identity(3));
    CHECK(id3.D == IntMatrix::identity(3));

    SmithForm one = smith_normal_form(IntMatrix{{2}});
    CHECK(one.D.at(0, 0) == 2);
}

TEST_CASE("smith transforms reconstruct the input") {
    std::mt19937 rng(7);
    for (int t = 0; t < 120; ++t) {
        int m = 1 + int(rng() % 4), n = 1 + int(rng() % 4);
        IntMatrix M = random_matrix(rng, m, n, 6);
        SmithForm s = smith_normal_form(M);
        CHECK(s.U * M * s.V == s.D);
        CHECK(abs_int(determinant(s.U)) == 1);
        CHECK(abs_int(determinant(s.V)) == 1);
        for (int i = 0; i + 1 < std::min(m, n); ++i) {
            if (s.D.at(i + 1, i + 1) != 0) {
                REQUIRE(s.D.at(i, i) != 0);
                CHECK(s.D.at(i + 1, i + 1) % s.D.at(i, i) == 0);
            }
        }
    }
}

TEST_CASE("hermite form is a canonical basis") {
    std::mt19937 rng(11);
    for (int t = 0; t < 80; ++t) {
        int m = 1 + int(rng() % 4), n = 1 + int(rng() % 5);
        IntMatrix M = random_matrix(rng, m, n, 5);
        Lattice L(M);
        // every original column is in the lattice
        for (int j = 0; j < n; ++j) CHECK(L.contains(M.column(j)));
        // shuffling generators gives the same stored basis
        std::vector<int> perm(n);
        for (int j = 0; j < n; ++j) perm[j] = j;
        std::shuffle(perm.begin(), perm.end(), rng);
        Lattice L2(M.select_columns(perm));
        CHECK(L == L2);
    }
}

TEST_CASE("lattice index") {
    Lattice sub(IntMatrix{{0}, {2}});
    Lattice sup(IntMatrix{{0}, {1}});
    CHECK(lattice_index(sub, sup) == 2);
    CHECK(lattice_index(sup, sup) == 1);

    Lattice mixed(IntMatrix{{3, 1}, {-2, 2}});
    CHECK(lattice_index(mixed, Lattice::full(2)) == 8);

    CHECK_THROWS_AS(lattice_index(sup, sub), NotSublattice);
    CHECK_THROWS_AS(lattice_index(Lattice(IntMatrix{{1}, {0}}), Lattice::full(2)), RankMismatch);
}

TEST_CASE("coset representatives") {
    Lattice sub(IntMatrix{{0}, {2}});
    Lattice sup(IntMatrix{{0}, {1}});
    auto reps = coset_representatives(sub, sup);
    REQUIRE(reps.size() == 2);
    CHECK(reps[0] == QVec{Rat(0), Rat(0)});
    CHECK(reps[1] == QVec{Rat(0), Rat(1)});

    CHECK(coset_representatives(Lattice::full(2), Lattice::full(2)).size() == 1);

    Lattice two(IntMatrix{{2, 0}, {0, 2}});
    auto four = coset_representatives(two, Lattice::full(2));
    REQUIRE(four.size() == 4);
    CHECK(std::is_sorted(four.begin(), four.end()));
}

TEST_CASE("coset representatives are pairwise distinct mod sub and count the index") {
    std::mt19937 rng(23);
    for (int t = 0; t < 60; ++t) {
        int d = 1 + int(rng() % 3);
        IntMatrix X = random_matrix(rng, d, d, 3);
        if (determinant(X) == 0) continue;
        Lattice sub(X);
        Lattice sup = Lattice::full(d);
        Int index = lattice_index(sub, sup);
        auto reps = coset_representatives(sub, sup);
        CHECK(Int(reps.size()) == index);
        for (size_t a = 0; a < reps.size(); ++a)
            for (size_t b = a + 1; b < reps.size(); ++b) {
                QVec diff = reps[a] - reps[b];
                CHECK(!sub.contains(to_zvec(diff)));
            }
    }
}

TEST_CASE("shifted lattice meet subspace") {
    // span{(2,3)} meets (-1,-1/2) + Z^2
    QVec beta{Rat(-1), Rat(-1, 2)};
    auto meet = shifted_lattice_meet_subspace(beta, IntMatrix{{2}, {3}});
    REQUIRE(meet.has_value());
    CHECK(is_integral(meet->point - beta));
    // the point lies on the line
    CHECK(meet->point[0] * Rat(3) == meet->point[1] * Rat(2));
    CHECK(meet->solution_lattice.rank() == 1);

    // integral beta always meets any subspace through the origin
    QVec ibeta{Rat(3), Rat(-2)};
    auto m2 = shifted_lattice_meet_subspace(ibeta, IntMatrix{{1, 0}, {0, 1}});
    REQUIRE(m2.has_value());

    // the zero subspace misses non-integral beta
    CHECK(!shifted_lattice_meet_subspace(beta, IntMatrix(2, 0)).has_value());
}

TEST_CASE("shifted meet agrees with a bounded scan") {
    std::mt19937 rng(37);
    for (int t = 0; t < 50; ++t) {
        int d = 2;
        IntMatrix B = random_matrix(rng, d, 1 + int(rng() % 2), 3);
        QVec beta{Rat(int(rng() % 7) - 3, 1 + int(rng() % 3)), Rat(int(rng() % 7) - 3, 1 + int(rng() % 3))};
        auto meet = shifted_lattice_meet_subspace(beta, B);
        bool found = false;
        for (int x = -6; x <= 6 && !found; ++x)
            for (int y = -6; y <= 6 && !found; ++y) {
                QVec cand = beta + QVec{Rat(x), Rat(y)};
                // cand in span(B)?
                if (solve_rational(B, cand).has_value()) found = true;
            }
        if (found) {
            REQUIRE(meet.has_value());
            CHECK(solve_rational(B, meet->point).has_value());
            CHECK(is_integral(meet->point - beta));
        }
        if (meet) {
            CHECK(solve_rational(B, meet->point).has_value());
            CHECK(is_integral(meet->point - beta));
        }
    }
}

TEST_CASE("positive functional exists exactly for pointed column sets") {
    CHECK(find_positive_functional(IntMatrix{{1, 1, 0}, {0, 1, 2}}).has_value());
    CHECK(!find_positive_functional(IntMatrix{{1, -1}}).has_value());
    auto h = find_positive_functional(IntMatrix{{1, 0}, {0, 1}});
    REQUIRE(h.has_value());
    CHECK((*h)[0] > 0);
    CHECK((*h)[1] > 0);
}

TEST_CASE("half open zonotope membership") {
    IntMatrix A{{1, 1, 0}, {0, 1, 2}};
    CHECK(in_half_open_zonotope(A, {Int(0), Int(0)}));
    CHECK(in_half_open_zonotope(A, {Int(0), Int(1)}));
    CHECK(!in_half_open_zonotope(A, {Int(2), Int(3)}));  // the excluded top corner
}
