#include <doctest.h>

#include "rock/graded_dim.hpp"
#include "rock/errors.hpp"

using namespace rock;

TEST_CASE("cyclotomic graded dimensions") {
    auto p0 = DividedPowerWord::plain({0});
    for (int e = 2; e <= 5; ++e) CHECK(cyclotomic_graded_dim(p0, p0, e).value == LaurentPoly(1));
    auto w = DividedPowerWord::plain({0, 1});
    CHECK(cyclotomic_graded_dim(w, w, 2).value == LaurentPoly(1) + LaurentPoly::monomial(2));
    CHECK(cyclotomic_graded_dim(p0, DividedPowerWord::plain({1}), 3).value.is_zero());
    // divided powers against their hat: i! q^{<i>}-scaling on each side
    for (int e = 2; e <= 3; ++e) {
        auto i = DividedPowerWord::parse("0,1^2");
        auto j = DividedPowerWord::parse("0,1,1");
        if (e == 3) {
            i = DividedPowerWord::parse("0,1,2^2");
            j = DividedPowerWord::parse("0,1,2,2");
        }
        auto di = cyclotomic_graded_dim(i, i, e).value;
        auto dh = cyclotomic_graded_dim(j, j, e).value;
        CHECK(di * i.factorial() * i.factorial() == dh);
    }
}

TEST_CASE("d=1 RoCK dimensions") {
    auto c2 = *is_rouquier_core(Partition(), 1, 2);
    ColoredComposition one(Composition{{1}}, {1}, 2);
    CHECK(rock_truncation_dim(c2, one, one).value == LaurentPoly(1) + LaurentPoly::monomial(2));
    auto c3 = *is_rouquier_core(Partition(), 1, 3);
    CHECK(rock_truncation_dim(c3, ColoredComposition(Composition{{1}}, {1}, 3), ColoredComposition(Composition{{1}}, {2}, 3)).value ==
          LaurentPoly::monomial(1));
    auto c4 = *is_rouquier_core(Partition(), 1, 4);
    CHECK(rock_truncation_dim(c4, ColoredComposition(Composition{{1}}, {1}, 4), ColoredComposition(Composition{{1}}, {3}, 4))
              .value.is_zero());
    CHECK_THROWS_AS(RockBlockDims(RouquierCore{Partition({2}), 2, 1, 0, 5, {}}, LjChoice::canonical(2)), DomainError);
}

TEST_CASE("closed forms") {
    CHECK(closed_form_dim_omega_omega(3, 2) == 72);
    CHECK(closed_form_dim_lambda_omega(ColoredComposition(Composition{{2}}, {1}, 3), 3) == 9);
    CHECK(closed_form_module_dim(ColoredComposition(Composition{{2}}, {1}, 3), 3) == 9);
    CHECK(closed_form_dim_lambda_omega(ColoredComposition(Composition{{1, 1}}, {1, 1}, 2), 2) == 8);
}

TEST_CASE("lj choice does not change dimensions") {
    auto core = make_rouquier_core(4, 2);
    RockBlockDims a(core, LjChoice::canonical(4)), b(core, LjChoice::reversed(4));
    for (const auto& lc : colored_compositions(2, 2, 4))
        for (const auto& bb : color_tuples(2, 4)) {
            ColoredComposition w(Composition{{1, 1}}, bb, 4);
            CHECK(a.dim(lc, w).value.at_one() == b.dim(lc, w).value.at_one());
        }
}
