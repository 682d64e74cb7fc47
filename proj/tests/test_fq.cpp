#include "doctest.h"

#include <set>

#include "brute.hpp"
#include "qmod/errors.hpp"
#include "qmod/fq.hpp"

using namespace qmod;

TEST_CASE("prime field arithmetic") {
    CHECK_THROWS_AS(PrimeField(0), SchemaError);
    CHECK_THROWS_AS(PrimeField(1), SchemaError);
    CHECK_THROWS_AS(PrimeField(4), SchemaError);
    CHECK_THROWS_AS(PrimeField(100), SchemaError);
    CHECK_NOTHROW(PrimeField(2147483647));  // 2^31 - 1

    PrimeField F(101);
    CHECK(F.add(100, 5) == 4);
    CHECK(F.sub(3, 7) == 97);
    CHECK(F.neg(0) == 0);
    CHECK(F.neg(1) == 100);
    CHECK(F.mul(50, 50) == 2500 % 101);
    CHECK(F.reduce(-1) == 100);
    CHECK(F.reduce(202) == 0);
    CHECK(F.pow(2, 100) == 1);  // Fermat
    CHECK(F.pow(2, 0) == 1);

    Rng rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        std::uint32_t a = 1 + rng.below(100);
        CHECK(F.mul(a, F.inv(a)) == 1);
        std::uint32_t b = rng.below(101);
        CHECK(F.pow(b, 5) == F.mul(b, F.mul(b, F.mul(b, F.mul(b, b)))));
    }
}

TEST_CASE("rank, rref, kernel, solve") {
    PrimeField F(5);
    FpMat a(2, 3);
    a.at(0, 0) = 1; a.at(0, 1) = 2; a.at(0, 2) = 3;
    a.at(1, 0) = 2; a.at(1, 1) = 4; a.at(1, 2) = 2;
    CHECK(fp_rank(F, a) == 2);

    FpMat singular(2, 2);
    singular.at(0, 0) = 1; singular.at(0, 1) = 2;
    singular.at(1, 0) = 2; singular.at(1, 1) = 4;
    CHECK(fp_rank(F, singular) == 1);
    CHECK_THROWS_AS(fp_inverse(F, singular), AssumptionError);

    CHECK(fp_rank(F, FpMat(0, 3)) == 0);
    CHECK(fp_rank(F, FpMat(3, 0)) == 0);

    Rng rng(9);
    for (std::uint32_t p : {2u, 101u}) {
        PrimeField G(p);
        for (int trial = 0; trial < 25; ++trial) {
            int rows = 1 + int(rng.below(4));
            int cols = 1 + int(rng.below(4));
            FpMat m = fp_random(G, rows, cols, rng);

            std::vector<int> pivots;
            FpMat r = fp_rref(G, m, &pivots);
            CHECK(int(pivots.size()) == fp_rank(G, m));
            CHECK(fp_rref(G, r) == r);  // idempotent
            for (std::size_t k = 0; k < pivots.size(); ++k) {
                CHECK(r.at(int(k), pivots[k]) == 1);
                for (int rr = 0; rr < rows; ++rr)
                    if (rr != int(k)) CHECK(r.at(rr, pivots[k]) == 0);
            }

            FpMat ker = fp_kernel(G, m);
            CHECK(ker.rows == cols);
            CHECK(ker.cols == cols - fp_rank(G, m));
            CHECK(fp_mul(G, m, ker).is_zero());
            if (ker.cols > 0) CHECK(fp_rank(G, ker) == ker.cols);

            // solve round-trip on a consistent system
            FpMat x = fp_random(G, cols, 2, rng);
            FpMat b2 = fp_mul(G, m, x);
            auto sol = fp_solve(G, m, b2);
            REQUIRE(sol.has_value());
            CHECK(fp_mul(G, m, *sol) == b2);

            // square invertible round-trip
            if (rows == cols && fp_rank(G, m) == rows) {
                FpMat inv = fp_inverse(G, m);
                CHECK(fp_mul(G, m, inv) == FpMat::identity(rows));
                CHECK(fp_mul(G, inv, m) == FpMat::identity(rows));
            }
        }
    }

    // inconsistent system
    PrimeField G2(2);
    FpMat zero(2, 2);
    FpMat rhs(2, 1);
    rhs.at(0, 0) = 1;
    CHECK_FALSE(fp_solve(G2, zero, rhs).has_value());
}

TEST_CASE("determinants") {
    PrimeField F(7);
    FpMat a(2, 2);
    a.at(0, 0) = 2; a.at(0, 1) = 3;
    a.at(1, 0) = 1; a.at(1, 1) = 5;
    CHECK(fp_det(F, a) == F.reduce(2 * 5 - 3 * 1));
    CHECK(fp_det(F, FpMat::identity(4)) == 1);
    CHECK(fp_det(F, FpMat(0, 0)) == 1);  // empty product
    CHECK_THROWS_AS(fp_det(F, FpMat(2, 3)), SchemaError);

    // row swap flips the sign
    FpMat swapped(2, 2);
    swapped.at(0, 0) = 1; swapped.at(0, 1) = 5;
    swapped.at(1, 0) = 2; swapped.at(1, 1) = 3;
    CHECK(F.add(fp_det(F, a), fp_det(F, swapped)) == 0);

    Rng rng(21);
    for (std::uint32_t p : {2u, 5u, 101u}) {
        PrimeField G(p);
        for (int trial = 0; trial < 30; ++trial) {
            int n = 1 + int(rng.below(4));
            FpMat x = fp_random(G, n, n, rng);
            FpMat y = fp_random(G, n, n, rng);
            CHECK(fp_det(G, fp_mul(G, x, y)) == G.mul(fp_det(G, x), fp_det(G, y)));
            CHECK((fp_det(G, x) == 0) == (fp_rank(G, x) < n));
        }
    }
}

TEST_CASE("transpose, scale, kron") {
    PrimeField F(5);
    Rng rng(33);
    FpMat m = fp_random(F, 3, 2, rng);
    FpMat mt = fp_transpose(m);
    CHECK(mt.rows == 2);
    CHECK(mt.cols == 3);
    CHECK(mt.at(1, 2) == m.at(2, 1));
    CHECK(fp_transpose(mt) == m);
    CHECK(fp_scale(F, 2, fp_scale(F, 3, m)) == fp_scale(F, 6 % 5, m));

    // T (x) I_s in the l-major layout: block (r, l) is T[r][l] * I_s
    IntMat t{{1, 0, -2}};
    FpMat k = fp_kron_identity(F, t, 2);
    CHECK(k.rows == 2);
    CHECK(k.cols == 6);
    for (int c = 0; c < 2; ++c) {
        for (int l = 0; l < 3; ++l) {
            for (int r = 0; r < 2; ++r) {
                std::uint32_t expect = (r == c) ? F.reduce(t[0][l]) : 0;
                CHECK(k.at(r, l * 2 + c) == expect);
            }
        }
    }
}

TEST_CASE("subspace enumeration") {
    struct Case { std::uint32_t p; int n; int k; };
    for (auto [p, n, k] : {Case{2, 4, 2}, Case{2, 3, 1}, Case{3, 3, 2}, Case{3, 4, 1}}) {
        PrimeField F(p);
        std::set<std::vector<std::uint32_t>> seen;
        std::uint64_t visits = 0;
        for_each_subspace(F, n, k, [&](const FpMat& w) {
            ++visits;
            CHECK(w.rows == k);
            CHECK(w.cols == n);
            CHECK(fp_rref(F, w) == w);  // emitted in reduced form
            FpMat copy = w;
            CHECK(fp_rank(F, copy) == k);
            seen.insert(w.a);
        });
        CHECK(visits == brute::subspace_count(p, n, k));
        CHECK(seen.size() == visits);  // no duplicates
        CHECK(visits == count_subspaces(p, n, k, 1'000'000));
    }

    // k = 0: the single zero subspace
    PrimeField F2(2);
    std::uint64_t zero_visits = 0;
    for_each_subspace(F2, 3, 0, [&](const FpMat& w) {
        ++zero_visits;
        CHECK(w.rows == 0);
    });
    CHECK(zero_visits == 1);

    CHECK(count_subspaces(2, 4, 2, 35) == 35);
    CHECK_THROWS_AS(count_subspaces(2, 4, 2, 34), BudgetError);
    CHECK(count_subspaces(5, 3, 5, 10) == 0);
}
