#include "doctest.h"

#include "brute.hpp"
#include "qmod/errors.hpp"
#include "qmod/motive.hpp"
#include "qmod/oracle.hpp"

using namespace qmod;

namespace {

const LPolynomial L = LPolynomial::var();

// A2 representation with prescribed dimensions and arrow rank.
QRep a2_rep(const A2IsoClass& c) {
    QRep rep;
    rep.dims = {c.d1, c.d2};
    FpMat m(c.d2, c.d1);
    for (int k = 0; k < c.r; ++k) m.at(k, k) = 1;
    rep.mats = {m};
    return rep;
}

struct Fixture {
    ExtensionData ext = brute::running_extension();
    SamplingGammaOracle gamma{ext};
    StabilityContext stab{ext, gamma};
    MotiveContext motive{stab, RepFullMotiveSource::symbolic()};
};

}  // namespace

TEST_CASE("A2 hom dimensions match linear algebra") {
    ExtensionData ext = brute::running_extension();
    PrimeField F(5);
    A2IsoClass t{3, 1, 1};

    CHECK(a2_hom_dim(t, t) == 7);  // dim End(T) = <t,t> for rigid T
    CHECK(a2_hom_dim(t, {1, 0, 0}) == 3);
    CHECK(a2_hom_dim(t, {0, 1, 0}) == 0);  // neither summand of T maps onto S_2

    for (int d1 = 0; d1 <= 2; ++d1)
        for (int d2 = 0; d2 <= 2; ++d2)
            for (int r = 0; r <= std::min(d1, d2); ++r)
                for (int e1 = 0; e1 <= 2; ++e1)
                    for (int e2 = 0; e2 <= 2; ++e2)
                        for (int q = 0; q <= std::min(e1, e2); ++q) {
                            A2IsoClass a{d1, d2, r};
                            A2IsoClass b{e1, e2, q};
                            int expect =
                                hom_space(F, ext.quiver, a2_rep(a), a2_rep(b)).dim();
                            CHECK(a2_hom_dim(a, b) == expect);
                        }
}

TEST_CASE("A2 submodule counts match subspace enumeration") {
    for (std::uint32_t p : {2u, 3u}) {
        PrimeField F(p);
        for (A2IsoClass big : {A2IsoClass{2, 1, 1}, A2IsoClass{2, 2, 1}, A2IsoClass{3, 1, 1},
                               A2IsoClass{2, 2, 2}, A2IsoClass{3, 2, 2}}) {
            if (p == 3 && big.d1 + big.d2 > 4) continue;  // keep the brute box small
            auto census = brute::submodule_census(F, a2_rep(big).mats[0]);
            for (int i = 0; i <= big.d1; ++i) {
                for (int j = 0; j <= big.d2; ++j) {
                    for (int r = 0; r <= std::min(i, j); ++r) {
                        A2IsoClass sub{i, j, r};
                        Int predicted = a2_submodule_count(big, sub).eval(p);
                        auto it = census.find(sub);
                        Int observed = it == census.end() ? Int(0) : Int(it->second);
                        CHECK(predicted == observed);
                    }
                }
            }
        }
    }
}

TEST_CASE("full locus classes for small types") {
    Fixture fx;

    CHECK(fx.motive.rep_full({1, {1, 0}}) == MotiveExpr(L.pow(3) - 1));
    CHECK(fx.motive.rep_full({1, {2, 0}}) ==
          MotiveExpr((L.pow(3) - 1) * (L.pow(3) - L)));
    CHECK(fx.motive.rep_full({1, {1, 1}}) == MotiveExpr((L - 1) * (L - 1)));
    CHECK(fx.motive.rep_full({1, {3, 1}}) ==
          MotiveExpr(L.pow(3) * (L - 1).pow(4) * (L + 1) * (L.pow(2) + L + 1)));
    CHECK(fx.motive.rep_full({1, {0, 0}}) == MotiveExpr(1));

    // empty loci are zero: d exceeding s*t leaves no surjective f
    CHECK(fx.motive.rep_full({1, {4, 0}}).is_zero());
    CHECK(fx.motive.rep_full({1, {0, 2}}).is_zero());
}

TEST_CASE("full locus classes count points") {
    Fixture fx;
    for (std::uint32_t p : {2u, 3u}) {
        PrimeField F(p);
        for (ExtDimVector v : {ExtDimVector{1, {1, 0}}, ExtDimVector{1, {1, 1}},
                               ExtDimVector{1, {2, 0}}, ExtDimVector{2, {1, 1}},
                               ExtDimVector{2, {2, 0}}, ExtDimVector{2, {2, 1}}}) {
            if (p == 3 && v.s == 2 && v.d[0] == 2) continue;  // larger boxes, slower
            CHECK(eval_at_integer(fx.motive.rep_full(v), p) ==
                  Int(count_rep_full_points(F, fx.ext, v)));
        }
    }
    CHECK(eval_at_integer(fx.motive.rep_full({2, {4, 1}}), 2) == 9374400);
}

TEST_CASE("stratum terms of the example type") {
    Fixture fx;
    std::vector<HNType> types = fx.stab.enumerate_hn_types({2, {4, 1}});
    REQUIRE(types.size() == 3);

    // types in order: (1|1,0)>(1|3,1), (1|1,1)>(1|3,0), (1|2,0)>(1|2,1)
    CHECK(fx.motive.stratum_term(types[0]) ==
          MotiveExpr(L.pow(3) - 1, L * (L - 1).pow(3)));
    CHECK(fx.motive.stratum_term(types[1]) ==
          MotiveExpr(LPolynomial(1), (L - 1) * (L - 1)));
    CHECK(fx.motive.stratum_term(types[2]) ==
          MotiveExpr((L.pow(3) - 1) * (L.pow(3) - L), (L - 1).pow(4)));

    // stratum_class = [G] * stratum_term
    for (const HNType& t : types) {
        CHECK(fx.motive.stratum_class(t) ==
              class_group(t.weight()) * fx.motive.stratum_term(t));
    }
}

TEST_CASE("semistable classes") {
    Fixture fx;

    // the example: rep_full minus the three strata, checked against the
    // displayed quotient [Rep]/[PG]
    MotiveExpr sst = fx.motive.sst({2, {4, 1}});
    MotiveExpr sum = fx.motive.rep_full({2, {4, 1}});
    for (const HNType& t : fx.stab.enumerate_hn_types({2, {4, 1}}))
        sum -= fx.motive.stratum_class(t);
    CHECK(sst == sum);

    LPolynomial num = L.pow(6) + L.pow(5) + LPolynomial::term(2, 4) +
                      LPolynomial::term(2, 3) + LPolynomial::term(2, 2) + L + 1;
    CHECK(fx.motive.rep_full({2, {4, 1}}) / class_pg({2, {4, 1}}) ==
          MotiveExpr(num, L.pow(2) - L));

    // non-semistable types have an empty semistable locus
    CHECK(fx.motive.sst({2, {2, 1}}).is_zero());
    CHECK(fx.motive.sst({0, {1, 0}}).is_zero());

    // s = 1 types with empty H: sst equals rep_full
    CHECK(fx.motive.sst({1, {1, 1}}) == fx.motive.rep_full({1, {1, 1}}));

    // semistable count at p = 2 for (2|2,0): census cross-check
    CHECK(eval_at_integer(fx.motive.sst({2, {2, 0}}), 2) == 3780);
}

TEST_CASE("Poincare polynomials") {
    Fixture fx;

    LPolynomial p4 = fx.motive.poincare_polynomial({2, {4, 1}});
    CHECK(p4 == L.pow(4) + L.pow(3) + L.pow(2) + L + 1);

    LPolynomial p6 = fx.motive.poincare_polynomial({3, {6, 2}});
    LPolynomial expect6;
    for (int e = 0; e <= 6; ++e) expect6 += LPolynomial::term(1, e);
    CHECK(p6 == expect6);

    CHECK(fx.motive.poincare_polynomial({1, {2, 1}}) == L + 1);
    CHECK(fx.motive.poincare_polynomial({1, {3, 1}}) == LPolynomial(1));
    CHECK(fx.motive.poincare_polynomial({1, {0, 0}}) == LPolynomial(1));

    // degree = expected moduli dimension, constant term 1
    for (ExtDimVector v : {ExtDimVector{2, {4, 1}}, ExtDimVector{3, {6, 2}},
                           ExtDimVector{1, {2, 1}}}) {
        LPolynomial p = fx.motive.poincare_polynomial(v);
        CHECK(p.degree() == expected_dims(fx.ext, v).dim_moduli);
        CHECK(p.coeff(0) == 1);
        for (const auto& tc : p.terms()) CHECK(tc.second > 0);
    }

    CHECK_THROWS_AS(fx.motive.poincare_polynomial({2, {2, 1}}), AssumptionError);
    CHECK_THROWS_AS(fx.motive.poincare_polynomial({2, {2, 0}}), AssumptionError);
}

TEST_CASE("interpolated source") {
    Fixture fx;

    MotiveContext interp(fx.stab, RepFullMotiveSource::interpolated({2, 3, 5}, 7));
    CHECK(interp.rep_full({1, {1, 1}}) == MotiveExpr((L - 1) * (L - 1)));

    MotiveContext interp3(fx.stab, RepFullMotiveSource::interpolated({2, 3, 5, 7}, 11));
    CHECK(interp3.rep_full({1, {1, 0}}) == MotiveExpr(L.pow(3) - 1));
    // degree 3 locus with only 3 primes cannot be pinned down
    MotiveContext starved(fx.stab, RepFullMotiveSource::interpolated({2, 3, 5}, 7));
    CHECK_THROWS_AS(starved.rep_full({1, {1, 0}}), UnsupportedError);

    MotiveContext unconfirmed(fx.stab, RepFullMotiveSource::interpolated({2, 3, 5}, 0));
    CHECK_THROWS_AS(unconfirmed.rep_full({1, {1, 1}}), SchemaError);

    // the interpolated pipeline reproduces the symbolic Poincare polynomial
    MotiveContext full(fx.stab,
                       RepFullMotiveSource::interpolated({2, 3, 5, 7, 11, 13, 17}, 19));
    CHECK(full.rep_full({1, {2, 0}}) == fx.motive.rep_full({1, {2, 0}}));
}

TEST_CASE("user table source") {
    Fixture fx;

    std::map<ExtDimVector, MotiveExpr> table;
    table[{1, {1, 1}}] = MotiveExpr((L - 1) * (L - 1));
    MotiveContext tabled(fx.stab, RepFullMotiveSource::user_table(table));

    CHECK(tabled.rep_full({1, {1, 1}}) == MotiveExpr((L - 1) * (L - 1)));
    CHECK(tabled.sst({1, {1, 1}}) == MotiveExpr((L - 1) * (L - 1)));
    CHECK_THROWS_AS(tabled.rep_full({1, {2, 0}}), UnsupportedError);
}

TEST_CASE("symbolic engine rejects other shapes") {
    Quiver q({"1", "2", "3"}, {{"a", "1", "2"}, {"b", "2", "3"}});
    ExtensionData ext{std::move(q), {1, 0, 0}, {{"a", IntMat{}}, {"b", IntMat{}}}, true,
                      true};
    SamplingGammaOracle gamma(ext);
    StabilityContext stab(ext, gamma);
    MotiveContext motive(stab, RepFullMotiveSource::symbolic());
    CHECK_THROWS_AS(motive.rep_full({1, {1, 0, 0}}), UnsupportedError);
}
