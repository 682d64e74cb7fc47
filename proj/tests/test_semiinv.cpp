#include "doctest.h"

#include <set>

#include "brute.hpp"
#include "qmod/errors.hpp"
#include "qmod/oracle.hpp"
#include "qmod/semiinv.hpp"

using namespace qmod;

namespace {

// Module of type (2|4,1) with f_1 = [A|B|C] prescribed blockwise and
// M = 0, f_2 = 0 (always a module because M f_1 = 0 = f_2 (T (x) I)).
FqRep block_point(const FpMat& a, const FpMat& b, const FpMat& c) {
    FqRep rep;
    rep.s = 2;
    rep.base.dims = {4, 1};
    rep.base.mats = {FpMat(1, 4)};
    rep.f = {FpMat(4, 6), FpMat(1, 2)};
    for (int r = 0; r < 4; ++r) {
        for (int col = 0; col < 2; ++col) {
            rep.f[0].at(r, col) = a.at(r, col);
            rep.f[0].at(r, 2 + col) = b.at(r, col);
            rep.f[0].at(r, 4 + col) = c.at(r, col);
        }
    }
    return rep;
}

}  // namespace

TEST_CASE("group action preserves the module locus") {
    ExtensionData ext = brute::running_extension();
    PrimeField F(101);
    Rng rng(61);

    for (ExtDimVector v : {ExtDimVector{2, {4, 1}}, ExtDimVector{1, {3, 1}}}) {
        for (int trial = 0; trial < 8; ++trial) {
            FqRep rep = random_full_module(F, ext, v, rng);
            GroupElement g = random_group_element(F, v, rng);
            FqRep moved = act(F, ext, g, rep);
            CHECK(is_module(F, ext, moved));
            CHECK(is_full(F, moved));
            CHECK(moved.dim() == v);

            // identity acts trivially
            GroupElement id;
            id.g_inf = FpMat::identity(v.s);
            for (int d : v.d) id.g.push_back(FpMat::identity(d));
            FqRep same = act(F, ext, id, rep);
            CHECK(same.base.mats[0] == rep.base.mats[0]);
            CHECK(same.f[0] == rep.f[0]);
            CHECK(same.f[1] == rep.f[1]);
        }
    }
}

TEST_CASE("built-in families exist exactly for the two example types") {
    ExtensionData ext = brute::running_extension();

    SIFamily small = builtin_si_family(ext, {2, {4, 1}});
    CHECK(small.dim == ExtDimVector{2, {4, 1}});
    CHECK(small.h.size() == 6);
    CHECK(small.h[0].name == "hbar0");
    CHECK(small.h[5].name == "hbar5");

    SIFamily big = builtin_si_family(ext, {3, {6, 2}});
    CHECK(big.h.size() == 8);

    CHECK_THROWS_AS(builtin_si_family(ext, {2, {3, 1}}), UnsupportedError);
    CHECK_THROWS_AS(builtin_si_family(ext, {1, {3, 1}}), UnsupportedError);

    Quiver q({"1", "2"}, {{"m", "1", "2"}});
    ExtensionData thin{std::move(q), {2, 1}, {{"m", {{1, 0}}}}, true, true};
    CHECK_THROWS_AS(builtin_si_family(thin, {2, {4, 1}}), UnsupportedError);
}

TEST_CASE("determinantal evaluation on explicit points") {
    ExtensionData ext = brute::running_extension();
    PrimeField F(5);
    SIFamily family = builtin_si_family(ext, {2, {4, 1}});

    // (A|B) = I_4: hbar1 = det = 1, hbar2 = det(A|C) = 0, and
    // hbar0 = -det of a matrix with two zero rows (M = 0) = 0
    FpMat a(4, 2), b(4, 2), c(4, 2);
    a.at(0, 0) = 1;
    a.at(1, 1) = 1;
    b.at(2, 0) = 1;
    b.at(3, 1) = 1;
    FqRep rep = block_point(a, b, c);
    REQUIRE(is_module(F, ext, rep));
    CHECK(evaluate_si(F, ext, family.h[1], rep) == 1);
    CHECK(evaluate_si(F, ext, family.h[2], rep) == 0);
    CHECK(evaluate_si(F, ext, family.h[0], rep) == 0);

    // hbar3 = det(A+C|B): with C = A this is det(2A|B) = 4 det(A|B)
    FqRep doubled = block_point(a, b, a);
    CHECK(evaluate_si(F, ext, family.h[1], doubled) == 1);
    CHECK(evaluate_si(F, ext, family.h[3], doubled) == 4);

    // swapping B's columns flips the sign of hbar1
    FpMat b_swapped(4, 2);
    b_swapped.at(2, 1) = 1;
    b_swapped.at(3, 0) = 1;
    FqRep swapped = block_point(a, b_swapped, c);
    CHECK(evaluate_si(F, ext, family.h[1], swapped) == F.neg(1));

    // dimension mismatch is rejected
    Rng rng(3);
    FqRep wrong = random_full_module(F, ext, {1, {3, 1}}, rng);
    CHECK_THROWS_AS(evaluate_si(F, ext, family.h[1], wrong), SchemaError);
}

TEST_CASE("determinantal functions are nonzero on stable points") {
    ExtensionData ext = brute::running_extension();
    PrimeField F(101);
    SIFamily family = builtin_si_family(ext, {2, {4, 1}});
    Rng rng(17);

    int stable_seen = 0;
    int h0_nonzero = 0;
    for (int trial = 0; trial < 12 && stable_seen < 8; ++trial) {
        FqRep rep = random_full_module(F, ext, {2, {4, 1}}, rng);
        if (king_check(F, ext, rep) != KingVerdict::Stable) continue;
        ++stable_seen;
        if (evaluate_si(F, ext, family.h[0], rep) != 0) ++h0_nonzero;
    }
    CHECK(stable_seen >= 6);
    CHECK(h0_nonzero >= stable_seen - 1);  // a random point misses the divisor
}

TEST_CASE("weight verification fits the known characters") {
    ExtensionData ext = brute::running_extension();
    PrimeField F(101);

    SIFamily small = builtin_si_family(ext, {2, {4, 1}});
    WeightFit f0 = verify_weight(F, ext, small.h[0], 8, 42);
    REQUIRE(f0.ok);
    CHECK(f0.w_inf == -3);
    CHECK(f0.w == std::vector<int>{1, 2});
    for (std::size_t k = 1; k < small.h.size(); ++k) {
        WeightFit fit = verify_weight(F, ext, small.h[k], 8, 42);
        REQUIRE(fit.ok);
        CHECK(fit.w_inf == -2);
        CHECK(fit.w == std::vector<int>{1, 0});
    }

    SIFamily big = builtin_si_family(ext, {3, {6, 2}});
    WeightFit g0 = verify_weight(F, ext, big.h[0], 4, 42);
    REQUIRE(g0.ok);
    CHECK(g0.w_inf == -6);
    CHECK(g0.w == std::vector<int>{2, 3});
    WeightFit g1 = verify_weight(F, ext, big.h[1], 4, 42);
    REQUIRE(g1.ok);
    CHECK(g1.w_inf == -2);
    CHECK(g1.w == std::vector<int>{1, 0});
}

TEST_CASE("degenerate functions are reported, not fitted") {
    ExtensionData ext = brute::running_extension();
    PrimeField F(101);
    SIFamily family = builtin_si_family(ext, {2, {4, 1}});

    // A - A is identically zero
    BlockDetSI zero = family.h[1];
    zero.grid = {{BlockCell{BlockTerm{1, {"A"}}, BlockTerm{-1, {"A"}}},
                  BlockCell{BlockTerm{1, {"B"}}}}};
    WeightFit fit = verify_weight(F, ext, zero, 4, 42);
    CHECK_FALSE(fit.ok);
    CHECK(fit.message.find("degenerate") != std::string::npos);
}

TEST_CASE("malformed grids are rejected") {
    ExtensionData ext = brute::running_extension();
    PrimeField F(101);
    Rng rng(9);
    FqRep rep = random_full_module(F, ext, {2, {4, 1}}, rng);
    SIFamily family = builtin_si_family(ext, {2, {4, 1}});

    BlockDetSI ragged = family.h[0];
    ragged.grid.back().pop_back();
    CHECK_THROWS_AS(evaluate_si(F, ext, ragged, rep), SchemaError);

    BlockDetSI unsized = family.h[1];
    unsized.grid = {{BlockCell{BlockTerm{1, {"A"}}}, BlockCell{}},
                    {BlockCell{}, BlockCell{}}};
    CHECK_THROWS_AS(evaluate_si(F, ext, unsized, rep), SchemaError);

    BlockDetSI unknown = family.h[1];
    unknown.grid = {{BlockCell{BlockTerm{1, {"Q"}}}}};
    CHECK_THROWS_AS(evaluate_si(F, ext, unknown, rep), SchemaError);

    // non-square assembled shape: a single 4x2 block
    BlockDetSI rect = family.h[1];
    rect.grid = {{BlockCell{BlockTerm{1, {"A"}}}}};
    CHECK_THROWS_AS(evaluate_si(F, ext, rect, rep), SchemaError);
}

TEST_CASE("quotient coordinates are orbit invariants") {
    ExtensionData ext = brute::running_extension();
    PrimeField F(101);
    SIFamily family = builtin_si_family(ext, {2, {4, 1}});
    Rng rng(71);

    int compared = 0;
    for (int trial = 0; trial < 20 && compared < 6; ++trial) {
        FqRep rep = random_full_module(F, ext, {2, {4, 1}}, rng);
        if (king_check(F, ext, rep) != KingVerdict::Stable) continue;
        ProjectivePoint base = quotient_coords(F, ext, family, rep);
        if (!base.defined) continue;
        ++compared;
        CHECK(base.coords.size() == 5);

        // normalization: first nonzero coordinate is 1
        bool seen_nonzero = false;
        for (std::uint32_t x : base.coords) {
            if (!seen_nonzero && x != 0) {
                CHECK(x == 1);
                seen_nonzero = true;
            }
        }
        CHECK(seen_nonzero);

        for (int inner = 0; inner < 4; ++inner) {
            GroupElement g = random_group_element(F, {2, {4, 1}}, rng);
            CHECK(quotient_coords(F, ext, family, act(F, ext, g, rep)) == base);
        }
    }
    CHECK(compared >= 4);

    // distinct stable orbits separate somewhere in the sample
    std::set<std::vector<std::uint32_t>> images;
    for (int trial = 0; trial < 24; ++trial) {
        FqRep rep = random_full_module(F, ext, {2, {4, 1}}, rng);
        if (king_check(F, ext, rep) != KingVerdict::Stable) continue;
        ProjectivePoint p = quotient_coords(F, ext, family, rep);
        if (p.defined) images.insert(p.coords);
    }
    CHECK(images.size() >= 2);
}
