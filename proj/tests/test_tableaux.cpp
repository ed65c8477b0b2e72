#include <doctest.h>

#include "rock/tableaux.hpp"

using namespace rock;

TEST_CASE("degree contributions") {
    CHECK(d_U(Partition({1}), {{1, 1, 0}}, 0, 3) == 0);
    CHECK(d_U(Partition({2}), {{1, 2, 0}}, 1, 2) == 1);
}

TEST_CASE("standard tableaux") {
    auto one = enumerate_std(SkewShape(Partition({1})), DividedPowerWord::plain({0}), 4);
    REQUIRE(one.size() == 1);
    CHECK(one[0].degree == 0);
    auto row = enumerate_std(SkewShape(Partition({2})), DividedPowerWord::plain({0, 1}), 2);
    REQUIRE(row.size() == 1);
    CHECK(row[0].degree == 1);
    auto col = enumerate_std(SkewShape(Partition({1, 1})), DividedPowerWord::plain({0, 1}), 2);
    REQUIRE(col.size() == 1);
    CHECK(col[0].degree == 0);
    std::set<Partition> shapes;
    for (const auto& p : partitions_of(3))
        if (!enumerate_std(SkewShape(p), DividedPowerWord::plain({0, 2, 1}), 3).empty()) shapes.insert(p);
    CHECK(shapes == std::set<Partition>{Partition({1, 1, 1}), Partition({2, 1})});
    for (const auto& p : partitions_up_to(6))
        for (const auto& t : all_divided_tableaux(SkewShape(p), 3)) {
            CHECK(is_standard(t, 3));
            CHECK(degree(t, 3) == t.degree);
        }
}

TEST_CASE("refinements") {
    auto plain = enumerate_std(SkewShape(Partition({3})), DividedPowerWord::plain({0, 1, 2}), 3);
    REQUIRE(plain.size() == 1);
    CHECK(refinements(plain[0], 3).size() == 1);
    // two independent 1-nodes of the skew shape (2,1)/(1)
    SkewShape sk(Partition({2, 1}), Partition({1}));
    auto ts = enumerate_std(sk, DividedPowerWord::parse("1^2"), 2);
    REQUIRE(ts.size() == 1);
    LaurentPoly sum;
    for (const auto& s : refinements(ts[0], 2)) sum.add_term(s.degree, 1);
    CHECK(sum == LaurentPoly::q_int(2).shifted(ts[0].degree));
}

TEST_CASE("matrix counts") {
    for (int e = 3; e <= 4; ++e)
        for (int c = 1; c < e; ++c)
            for (int b = 1; b < e; ++b) {
                ColoredComposition lc(Composition{{1}}, {c}, e);
                long long want = (c == b) ? 2 : (std::abs(c - b) == 1 ? 1 : 0);
                CHECK(matrix_count(lc, {b}, e) == want);
            }
    for (int e = 2; e <= 4; ++e)
        for (int n = 1; n <= 3; ++n)
            for (const auto& lc : colored_compositions(n, 2, e))
                for (const auto& b : color_tuples(2, e)) CHECK(matrix_count(lc, b, e) == index_sum(lc, b, e));
}

TEST_CASE("colored tableaux") {
    ColoredComposition lc(Composition{{1}}, {2}, 3);
    Multipartition mu({Partition(), Partition(), Partition({1})});
    CHECK(enumerate_colored(mu, lc).size() == 1);
    Multipartition bad({Partition({1}), Partition(), Partition()});
    CHECK(enumerate_colored(bad, lc).empty());
}
