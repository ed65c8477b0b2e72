#include <doctest.h>

#include "rock/schur.hpp"
#include "rock/turner_double.hpp"
#include "rock/verify.hpp"

using namespace rock;

TEST_CASE("Schur algebra for e=2, n=1, d=1") {
    SchurAlgebra S(1, 1, 2);
    CHECK(S.hom_rank(0, 0) == LaurentPoly(1) + LaurentPoly::monomial(2));
    CHECK(S.hom_space(0, 0, 0).contains(S.xi(0).blocks.begin()->second));
    auto x = S.xi(0);
    CHECK(S.mul(x, x).blocks == x.blocks);
}

TEST_CASE("Schur and T ranks") {
    SchurAlgebra S(2, 2, 2);
    CHECK(S.graded_rank() == LaurentPoly(10) + LaurentPoly::monomial(2, 16) + LaurentPoly::monomial(4, 10));
    TSubalgebra T(S);
    CHECK(T.graded_rank() == S.graded_rank());
    CHECK(T.is_closed());
    TSubalgebra T2(S, true);
    CHECK(T == T2);
}

TEST_CASE("Turner double") {
    DoubleAlgebra D1(1, 1, 2);
    CHECK(D1.graded_rank() == LaurentPoly(1) + LaurentPoly::monomial(2));
    DoubleAlgebra D(2, 2, 3);
    CHECK(D.graded_rank().at_one() == 292);
    CHECK(D.graded_rank().coeff(0) == 36);
    DoubleAlgebra D2(2, 1, 3);
    CHECK(D2.graded_rank().at_one() == 2 * D2.X().dim());
    auto one = D.one();
    for (const auto& k : D.basis()) {
        DoubleElement x{{k, 1}};
        CHECK(D.mul(one, x) == x);
        CHECK(D.mul(x, one) == x);
    }
}

TEST_CASE("rank reports") {
    auto r = rank_report(2, 2, 2);
    CHECK(r.t == r.dbl);
    CHECK(r.degree_zero == 10);
    CHECK(r.degree_zero_formula == 10);
    CHECK(simple_count(3, 2).pj == 5);
}

TEST_CASE("suites") {
    CHECK(verify_schur(2, 2, 2, 20, 1).passed());
    CHECK(verify_double(2, 2, 2, 50, 1).passed());
}
