#include <doctest.h>

#include <algorithm>
#include <set>

#include "rock/combinatorics.hpp"
#include "rock/errors.hpp"
#include "rock/laurent.hpp"
#include "rock/permutation.hpp"

using namespace rock;

TEST_CASE("residues") {
    CHECK(residue(1, 1, 3) == 0);
    CHECK(residue(2, 1, 3) == 2);
    for (int j = 1; j <= 6; ++j) CHECK(residue(1, j, 5) == (j - 1) % 5);
}

TEST_CASE("content") {
    CHECK(content(Partition({1}), 2) == std::vector<int>{1, 0});
    CHECK(content(Partition({3, 1}), 2) == std::vector<int>{2, 2});
    CHECK(content(SkewShape(Partition({2}), Partition({1})), 3) == std::vector<int>{0, 1, 0});
    for (const auto& p : partitions_up_to(7)) {
        auto c = content(p, 3);
        CHECK(c[0] + c[1] + c[2] == p.size());
    }
}

TEST_CASE("partition parsing") {
    CHECK(Partition::parse("3,1") == Partition({3, 1}));
    CHECK(Partition::parse("∅").empty());
    CHECK(Partition::parse("").empty());
    CHECK(Partition({2, 1, 0, 0}).length() == 2);
    CHECK_THROWS_AS(Partition::parse("3,5"), PreconditionError);
    CHECK_THROWS_AS(Partition::parse("a"), PreconditionError);
    CHECK(Partition({3, 1}).conjugate() == Partition({2, 1, 1}));
}

TEST_CASE("bends") {
    for (int j = 1; j <= 3; ++j) {
        CHECK(is_bend({{1, 1, j}}, j));
        CHECK_FALSE(is_bend({{1, 1, j}, {1, 2, j}}, j));
        CHECK(is_bend({{1, 1, j - 1}, {1, 2, j - 1}, {1, 1, j}}, j));
    }
}

TEST_CASE("node order") {
    std::vector<Node> ns;
    for (int r = 1; r <= 3; ++r)
        for (int s = 1; s <= 3; ++s)
            for (int i = 0; i < 2; ++i) ns.push_back({r, s, i});
    for (const auto& a : ns) {
        CHECK(node_leq(a, a));
        for (const auto& b : ns) {
            if (node_leq(a, b) && node_leq(b, a)) CHECK(a == b);
            CHECK(nodes_independent(a, b) == nodes_independent(b, a));
            for (const auto& c : ns)
                if (node_leq(a, b) && node_leq(b, c)) CHECK(node_leq(a, c));
        }
    }
}

TEST_CASE("enumerations") {
    CHECK(partitions_of(4).size() == 5);
    CHECK(partitions_of(4).front() == Partition({4}));
    CHECK(multipartitions(2, 2).size() == 5);
    CHECK(compositions(2, 2).size() == 3);
    CHECK(compositions(2, 2).front().parts == std::vector<int>{2, 0});
    CHECK(compositions(0, 0).size() == 1);
    CHECK(color_tuples(2, 3).size() == 4);
}

TEST_CASE("coset representatives") {
    CHECK(min_coset_reps_left(Composition{{3}}).size() == 1);
    CHECK(min_coset_reps_left(Composition{{1, 1}}).size() == 2);
    CHECK(min_coset_reps_left(Composition{{2, 1}}).size() == 3);
    for (int d = 1; d <= 4; ++d)
        for (const auto& lam : compositions(3, d)) {
            long long prod = 1;
            for (int p : lam.parts) prod *= factorial(p);
            auto reps = min_coset_reps_left(lam);
            CHECK(static_cast<long long>(reps.size()) * prod == factorial(d));
            CHECK(min_coset_reps_right(lam).size() == reps.size());
            // brute force: one shortest element per coset S_λ g
            std::set<std::vector<int>> seen;
            for (const auto& w : all_permutations(d)) {
                auto [h, g] = factor_left(w, lam);
                CHECK(in_parabolic(h, lam));
                CHECK(is_min_left_rep(g, lam));
                CHECK(h * g == w);
                seen.insert(g.images());
            }
            CHECK(seen.size() == reps.size());
        }
}

TEST_CASE("permutations") {
    auto s1 = Permutation::simple(3, 1);
    CHECK(s1(1) == 2);
    CHECK(s1.length() == 1);
    CHECK((s1 * s1).is_identity());
    for (const auto& g : all_permutations(4))
        for (const auto& h : all_permutations(4)) CHECK((g * h)(1) == g(h(1)));
}

TEST_CASE("laurent polynomials") {
    CHECK(LaurentPoly::q_int(2) == LaurentPoly::monomial(1) + LaurentPoly::monomial(-1));
    CHECK(LaurentPoly::q_fact(3) == (LaurentPoly::monomial(2) + 1 + LaurentPoly::monomial(-2)) *
                                        (LaurentPoly::monomial(1) + LaurentPoly::monomial(-1)));
    CHECK(LaurentPoly::q_fact(0) == LaurentPoly(1));
    CHECK((LaurentPoly(1) + LaurentPoly::monomial(2)).to_string() == "1 + q^2");
    CHECK(LaurentPoly().to_string() == "0");
    CHECK(LaurentPoly::q_fact(4).at_one() == 24);
    CHECK(LaurentPoly::q_fact(3).bar() == LaurentPoly::q_fact(3));
}
