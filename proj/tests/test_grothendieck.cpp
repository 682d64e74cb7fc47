#include "doctest.h"

#include "brute.hpp"
#include "qmod/errors.hpp"
#include "qmod/grothendieck.hpp"

using namespace qmod;

namespace {

const LPolynomial L = LPolynomial::var();

}  // namespace

TEST_CASE("rational normalization and equality") {
    MotiveExpr a(L * L - 1, L - 1);
    CHECK(a.is_polynomial());
    CHECK(a.as_polynomial() == L + 1);
    CHECK(a == MotiveExpr(L + 1));

    // common content and sign both normalize away
    MotiveExpr b(LPolynomial(2) * (L + 1), LPolynomial(2));
    CHECK(b == MotiveExpr(L + 1));
    MotiveExpr c(-(L + 1), -LPolynomial(1));
    CHECK(c == MotiveExpr(L + 1));
    CHECK(c.den().leading() > 0);

    MotiveExpr q(LPolynomial(1), L - 1);
    CHECK_FALSE(q.is_polynomial());
    CHECK_THROWS_AS(q.as_polynomial(), AssumptionError);
    CHECK_THROWS_AS(MotiveExpr(LPolynomial(1), LPolynomial()), SchemaError);

    CHECK(MotiveExpr().is_zero());
    CHECK(MotiveExpr(LPolynomial(), L - 1).is_zero());
    CHECK(MotiveExpr(LPolynomial(), L - 1) == MotiveExpr());
}

TEST_CASE("field arithmetic") {
    MotiveExpr x(L, L - 1);
    MotiveExpr y(L + 1, L * L + 1);
    MotiveExpr z(L - 1);

    CHECK(x + y - y == x);
    CHECK(x * y / y == x);
    CHECK((x / x) == MotiveExpr(1));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK((-x) + x == MotiveExpr());
    CHECK(x.pow(3) == x * x * x);
    CHECK(x.pow(0) == MotiveExpr(1));
    CHECK_THROWS_AS(x / MotiveExpr(), SchemaError);

    // telescoping product stays canonical
    MotiveExpr t = MotiveExpr(L * L - 1, L - 1) * MotiveExpr(L - 1, L + 1);
    CHECK(t == MotiveExpr(L - 1));
}

TEST_CASE("lefschetz powers and dimension") {
    CHECK(MotiveExpr::lefschetz_pow(3) == MotiveExpr(L.pow(3)));
    CHECK(MotiveExpr::lefschetz_pow(0) == MotiveExpr(1));
    CHECK(MotiveExpr::lefschetz_pow(-2) == MotiveExpr(LPolynomial(1), L.pow(2)));
    CHECK(MotiveExpr::lefschetz_pow(-2) * MotiveExpr::lefschetz_pow(5) ==
          MotiveExpr::lefschetz_pow(3));

    CHECK(MotiveExpr(L.pow(4) + 1).dimension() == 4);
    CHECK(MotiveExpr(L + 1, L.pow(3)).dimension() == -2);
}

TEST_CASE("evaluation") {
    MotiveExpr a(L.pow(3) - 1, L - 1);
    CHECK(a.eval_at(2) == BigRational(Int(7)));
    CHECK(eval_at_integer(a, 2) == 7);
    CHECK(eval_at_integer(a, 5) == 31);

    MotiveExpr half(LPolynomial(1), L);
    CHECK(half.eval_at(2) == BigRational(Int(1), Int(2)));
    CHECK_THROWS_AS(eval_at_integer(half, 2), AssumptionError);
    CHECK_THROWS_AS(half.eval_at(0), AssumptionError);
}

TEST_CASE("group classes match finite group orders") {
    CHECK(class_gl(0) == MotiveExpr(1));
    CHECK(class_gl(1) == MotiveExpr(L - 1));
    CHECK(class_gl(2) == MotiveExpr((L.pow(2) - 1) * (L.pow(2) - L)));

    for (std::uint32_t p : {2u, 3u}) {
        for (int n = 0; n <= 3; ++n)
            CHECK(eval_at_integer(class_gl(n), p) == Int(brute::gl_order(p, n)));
    }

    ExtDimVector v{2, {4, 1}};
    Int g2 = eval_at_integer(class_group(v), 2);
    CHECK(g2 == Int(brute::gl_order(2, 2)) * Int(brute::gl_order(2, 4)) *
                    Int(brute::gl_order(2, 1)));
    CHECK(g2 == 120960);

    // PG = G / (L - 1); at q = 2 the torus factor is 1
    CHECK(eval_at_integer(class_pg(v), 2) == 120960);
    CHECK(class_pg(v) * MotiveExpr(L - 1) == class_group(v));
}

TEST_CASE("parabolic classes") {
    ExtDimVector a{1, {1, 0}};
    ExtDimVector b{1, {3, 1}};
    std::vector<ExtDimVector> steps{a, b};

    // one-step decomposition degenerates to the full group
    CHECK(class_parabolic({a}) == class_group(a));

    // G/P is the product of partial flag varieties: GL2/B x GL4/P(1,3) x pt
    MotiveExpr flag = class_group({2, {4, 1}}) / class_parabolic(steps);
    CHECK(flag.is_polynomial());
    CHECK(flag.as_polynomial() == (L + 1) * (L.pow(3) + L.pow(2) + L + 1));

    // |P(F_2)| x |G/P(F_2)| = |G(F_2)|
    CHECK(eval_at_integer(class_parabolic(steps), 2) * eval_at_integer(flag, 2) ==
          eval_at_integer(class_group({2, {4, 1}}), 2));
}
