#include <doctest.h>

#include "rock/graded_dim.hpp"
#include "rock/zigzag.hpp"

using namespace rock;

TEST_CASE("zigzag algebra") {
    CHECK(graded_dim_Z(2) == LaurentPoly(1) + LaurentPoly::monomial(2));
    CHECK(graded_dim_Z(3) == LaurentPoly(2) + LaurentPoly::monomial(1, 2) + LaurentPoly::monomial(2, 2));
    for (int e = 3; e <= 6; ++e) {
        Zigzag Z(e);
        for (int j = 1; j < e; ++j) CHECK(Z.mul(Z.vertex(j), Z.vertex(j)) == Z.vertex(j));
        CHECK(Z.mul(Z.arrow(1, 2), Z.arrow(2, 1)) == Z.loop(1));
        if (e >= 4) CHECK(Z.mul(Z.arrow(3, 2), Z.arrow(2, 1)) < 0);
    }
    CHECK(dim_ejZ(1, 2) == 2);
    CHECK(dim_ejZ(1, 4) == 3);
    CHECK(dim_ejZ(2, 4) == 4);
}

TEST_CASE("wreath product") {
    Wreath W(3, 2);
    CHECK(W.basis_count() == closed_form_dim_omega_omega(3, 2));
    auto one = W.one();
    for (const auto& k : W.basis()) {
        WreathElement x{{k, 1}};
        CHECK(W.mul(one, x) == x);
    }
}

TEST_CASE("signs and modules") {
    ColoredComposition odd(Composition{{3}}, {1}, 3);
    for (const auto& g : parabolic_elements(odd.lambda)) CHECK(epsilon(odd, g) == 1);
    ColoredComposition even(Composition{{2}}, {2}, 3);
    CHECK(epsilon(even, Permutation::simple(2, 1)) == -1);
    ColoredModule M(ColoredComposition(Composition{{2}}, {1}, 3), 3);
    CHECK(M.dim() == 9);
    ColoredModule M2(even, 3);
    int m = M2.generator();
    auto s = M2.act(m, M2.idempotent_times(Permutation::simple(2, 1)));
    CHECK(s.index == m);
    CHECK(s.sign == -1);
}
