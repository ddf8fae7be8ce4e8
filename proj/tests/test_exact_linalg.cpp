#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "xiknot/exact_linalg.hpp"

#include <random>

using namespace xiknot;

namespace {

IntMat random_int_mat(std::mt19937& rng, int r, int c, int lo, int hi, int sparsity_pct) {
    std::uniform_int_distribution<int> val(lo, hi), pct(0, 99);
    IntMat m(r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j)
            if (pct(rng) < sparsity_pct) m(i, j) = val(rng);
    return m;
}

IntMat diag_padded(const SmithForm& s) {
    IntMat d(s.rows, s.cols);
    for (int i = 0; i < s.rank; ++i) d(i, i) = s.diag[i];
    return d;
}

}  // namespace

TEST_CASE("smith form of known matrices") {
    {
        SmithForm s = smith_normal_form(SparseIntMat::from_dense(IntMat{{Int(2), Int(4)}, {Int(-2), Int(6)}}));
        CHECK(s.rank == 2);
        REQUIRE(s.diag.size() == 2);
        CHECK(s.diag[0] == 2);
        CHECK(s.diag[1] == 10);
    }
    {
        SmithForm s = smith_normal_form(SparseIntMat::from_dense(IntMat{{Int(1), Int(0)}, {Int(0), Int(0)}}));
        CHECK(s.rank == 1);
        CHECK(s.diag[0] == 1);
    }
    {
        SmithForm s = smith_normal_form(SparseIntMat(3, 4));  // zero matrix
        CHECK(s.rank == 0);
        CHECK(s.diag.empty());
    }
}

TEST_CASE("smith form reconstruction and unimodularity on random matrices") {
    std::mt19937 rng(20240901);
    std::uniform_int_distribution<int> dim(1, 8), sp(25, 100);
    for (int iter = 0; iter < 200; ++iter) {
        int r = dim(rng), c = dim(rng);
        IntMat a = random_int_mat(rng, r, c, -6, 6, sp(rng));
        SmithForm s = smith_normal_form(SparseIntMat::from_dense(a));

        IntMat u = row_ops_as_matrix(s.row_ops, r);
        IntMat v = col_ops_as_matrix(s.col_ops, c);
        CHECK(u * a * v == diag_padded(s));

        Rat du = det(u), dv = det(v);
        CHECK(du * du == 1);
        CHECK(dv * dv == 1);

        for (size_t i = 0; i < s.diag.size(); ++i) {
            CHECK(s.diag[i] > 0);
            if (i + 1 < s.diag.size()) CHECK(s.diag[i + 1] % s.diag[i] == 0);
        }

        // Logged-op replay agrees with the dense transforms.
        std::uniform_int_distribution<int> val(-5, 5);
        std::vector<Int> z(static_cast<size_t>(r)), y(static_cast<size_t>(c));
        for (auto& x : z) x = val(rng);
        for (auto& x : y) x = val(rng);
        std::vector<Int> uz = s.transform_rhs(z);
        std::vector<Int> vy = s.build_solution(y);
        for (int i = 0; i < r; ++i) {
            Int acc(0);
            for (int j = 0; j < r; ++j) acc += u(i, j) * z[static_cast<size_t>(j)];
            CHECK(uz[static_cast<size_t>(i)] == acc);
        }
        for (int i = 0; i < c; ++i) {
            Int acc(0);
            for (int j = 0; j < c; ++j) acc += v(i, j) * y[static_cast<size_t>(j)];
            CHECK(vy[static_cast<size_t>(i)] == acc);
        }
    }
}

TEST_CASE("scaled solve: image vectors solve with n = 1") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> dim(1, 7), val(-4, 4);
    for (int iter = 0; iter < 100; ++iter) {
        int r = dim(rng), c = dim(rng);
        IntMat a = random_int_mat(rng, r, c, -5, 5, 60);
        std::vector<Int> f0(static_cast<size_t>(c));
        for (auto& x : f0) x = val(rng);
        std::vector<Int> z(static_cast<size_t>(r), Int(0));
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j) z[static_cast<size_t>(i)] += a(i, j) * f0[static_cast<size_t>(j)];

        SmithForm s = smith_normal_form(SparseIntMat::from_dense(a));
        auto sol = solve_scaled(s, z);
        REQUIRE(sol.has_value());
        CHECK(sol->n == 1);
        for (int i = 0; i < r; ++i) {
            Int acc(0);
            for (int j = 0; j < c; ++j) acc += a(i, j) * sol->chain[static_cast<size_t>(j)];
            CHECK(acc == z[static_cast<size_t>(i)]);
        }
    }
}

TEST_CASE("scaled solve: minimal multiplier and unsolvable cases") {
    {
        SmithForm s = smith_normal_form(SparseIntMat::from_dense(IntMat{{Int(2)}}));
        auto sol = solve_scaled(s, {Int(1)});
        REQUIRE(sol.has_value());
        CHECK(sol->n == 2);
        CHECK(sol->chain == std::vector<Int>{Int(1)});
    }
    {
        // lcm over several diagonal constraints: diag(2, 3), z = (1, 1) -> n = 6.
        SmithForm s = smith_normal_form(SparseIntMat::from_dense(IntMat{{Int(2), Int(0)}, {Int(0), Int(3)}}));
        auto sol = solve_scaled(s, {Int(1), Int(1)});
        REQUIRE(sol.has_value());
        CHECK(sol->n == 6);
        CHECK(sol->chain == std::vector<Int>{Int(3), Int(2)});
    }
    {
        SmithForm s = smith_normal_form(SparseIntMat::from_dense(IntMat{{Int(1)}, {Int(0)}}));
        CHECK(!solve_scaled(s, {Int(0), Int(1)}).has_value());
    }
}

TEST_CASE("homology invariant factors of small complexes") {
    {
        // Projective plane: one 2-cell attached along a^2, one 1-cell loop.
        SmithForm d2 = smith_normal_form(SparseIntMat::from_dense(IntMat{{Int(2)}}));
        auto f = homology_invariant_factors(d2, /*rank_d1=*/0, /*n1=*/1);
        REQUIRE(f.size() == 1);
        CHECK(f[0] == 2);
    }
    {
        // Klein bottle: d2 = (2a, 0b), two loops, one vertex.
        SmithForm d2 = smith_normal_form(SparseIntMat::from_dense(IntMat{{Int(2)}, {Int(0)}}));
        auto f = homology_invariant_factors(d2, 0, 2);
        REQUIRE(f.size() == 2);
        CHECK(f[0] == 2);
        CHECK(f[1] == 0);
    }
    {
        // Torus: d2 = 0 on two loops.
        SmithForm d2 = smith_normal_form(SparseIntMat(2, 1));
        auto f = homology_invariant_factors(d2, 0, 2);
        REQUIRE(f.size() == 2);
        CHECK(f[0] == 0);
        CHECK(f[1] == 0);
    }
}
