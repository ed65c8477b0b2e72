#include <doctest.h>

#include <algorithm>
#include <set>

#include "rock/errors.hpp"
#include "rock/words.hpp"

using namespace rock;

TEST_CASE("delta words") {
    CHECK(delta_words(3, 1) == std::vector<Word>{{0, 2, 1}});
    CHECK(delta_words(3, 2) == std::vector<Word>{{0, 1, 2}});
    for (int e = 3; e <= 6; ++e) CHECK(static_cast<int>(delta_words(e, e - 2).size()) == e - 2);
    CHECK(canonical_lj(3, 1) == Word{0, 2, 1});
    CHECK(canonical_lj(5, 3) == Word{0, 1, 2, 4, 3});
    CHECK(canonical_lj(2, 1) == Word{0, 1});
    auto ws = delta_words(5, 3);
    CHECK(std::find(ws.begin(), ws.end(), canonical_lj(5, 3)) != ws.end());
    CHECK(std::find(ws.begin(), ws.end(), reversed_lj(5, 3)) != ws.end());
}

TEST_CASE("divided power words") {
    auto w = DividedPowerWord::parse("0^2,1");
    CHECK(w.terms == std::vector<std::pair<int, int>>{{0, 2}, {1, 1}});
    CHECK(DividedPowerWord::parse("0(2) 1") == w);
    CHECK(w.hat() == Word{0, 0, 1});
    CHECK(w.angle() == 1);
    CHECK(w.factorial() == LaurentPoly::q_int(2));
    CHECK(w.shifted(1, 2).hat() == Word{1, 1, 0});
    CHECK_THROWS_AS(DividedPowerWord::parse("x"), PreconditionError);
}

TEST_CASE("Gelfand-Graev words") {
    ColoredComposition one(Composition{{1}}, {1}, 3);
    CHECK(gg_word(one, 3).hat() == canonical_lj(3, 1));
    CHECK(a_lambda(one, 3) == 0);
    ColoredComposition two(Composition{{2}}, {1}, 2);
    CHECK(gg_word(two, 2).terms == std::vector<std::pair<int, int>>{{0, 2}, {1, 2}});
    CHECK(a_lambda(two, 2) == -2);
    ColoredComposition om(Composition{{1, 1, 1}}, {1, 2, 1}, 3);
    CHECK(a_lambda(om, 3) == 0);
    for (int e = 2; e <= 4; ++e)
        for (const auto& lc : colored_compositions(2, 3, e)) CHECK(gg_word(lc, e).angle() == -a_lambda(lc, e));
}

TEST_CASE("separated and semicuspidal words") {
    CHECK(is_separated(parse_word("0012342341"), 5));
    CHECK_FALSE(is_semicuspidal(parse_word("0012342341"), 5));
    CHECK_FALSE(is_separated(parse_word("1100"), 2));
    CHECK_THROWS_AS(is_separated(parse_word("001"), 2), DomainError);
    CHECK(semicuspidal_words(2, 2) == std::set<Word>{{0, 1, 0, 1}, {0, 0, 1, 1}});
    for (int e = 2; e <= 5; ++e) {
        auto sc1 = semicuspidal_words(e, 1);
        for (int j = 1; j < e; ++j)
            for (const auto& w : delta_words(e, j)) CHECK(sc1.count(w) == 1);
        for (int d = 1; d <= 2; ++d)
            for (const auto& w : semicuspidal_words(e, d)) CHECK(is_separated(w, e));
    }
}
