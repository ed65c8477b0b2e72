#include <doctest.h>

#include <random>

#include "rock/errors.hpp"
#include "rock/intlinalg.hpp"

using namespace rock;

namespace {
IntMatrix M(std::vector<std::vector<long long>> rows) {
    IntMatrix out;
    for (auto& r : rows) out.push_back(to_big(r));
    return out;
}
}  // namespace

TEST_CASE("hermite normal form") {
    CHECK(hnf(M({{1, 0}, {0, 1}})) == M({{1, 0}, {0, 1}}));
    CHECK(hnf(M({{2, 4}, {0, 3}})) == M({{2, 1}, {0, 3}}));
    CHECK(hnf(M({{0, 0}, {0, 0}})).empty());
    std::mt19937 rng(3);
    for (int it = 0; it < 50; ++it) {
        IntMatrix A;
        for (int r = 0; r < 4; ++r) {
            std::vector<long long> row;
            for (int c = 0; c < 5; ++c) row.push_back(static_cast<long long>(rng() % 11) - 5);
            A.push_back(to_big(row));
        }
        auto H = hnf(A);
        CHECK(hnf(H) == H);
        Lattice L(5, A);
        for (const auto& row : A) CHECK(L.contains(row));
    }
}

TEST_CASE("kernels") {
    auto k1 = kernel(M({{1, 1}}), 2);
    REQUIRE(k1.rank() == 1);
    CHECK(k1.contains(to_big({1, -1})));
    auto k2 = kernel(M({{2, 4}}), 2);
    REQUIRE(k2.rank() == 1);
    CHECK(k2.contains(to_big({2, -1})));
    CHECK_FALSE(k2.contains(to_big({1, 0})));
    CHECK(kernel(M({{1, 2}, {3, 4}}), 2).rank() == 0);
    // saturation: (1,1,-1) is in the kernel of [[2,0,2],[0,2,2]] over Z
    auto k3 = kernel(M({{2, 0, 2}, {0, 2, 2}}), 3);
    CHECK(k3.contains(to_big({1, 1, -1})));
    std::mt19937 rng(5);
    for (int it = 0; it < 30; ++it) {
        IntMatrix A;
        for (int r = 0; r < 3; ++r) {
            std::vector<long long> row;
            for (int c = 0; c < 6; ++c) row.push_back(static_cast<long long>(rng() % 7) - 3);
            A.push_back(to_big(row));
        }
        auto K = kernel(A, 6);
        for (const auto& v : K.basis())
            for (const auto& row : A) {
                BigInt s = 0;
                for (int c = 0; c < 6; ++c) s += row[c] * v[c];
                CHECK(s == 0);
            }
    }
}

TEST_CASE("solve, membership and closure") {
    auto x = solve(M({{1, 0}, {0, 1}}), to_big({3, -2}));
    REQUIRE(x.has_value());
    CHECK(*x == to_big({3, -2}));
    CHECK_FALSE(solve(M({{2, 0}}), to_big({1, 0})).has_value());
    Lattice L(2, M({{2, 0}}));
    CHECK_FALSE(member(L, to_big({1, 0})));
    CHECK(member(L, to_big({4, 0})));
    // componentwise product on Z^2: span{(1,1)} is closed
    auto prod = [](const IntVector& a, const IntVector& b) { return IntVector{a[0] * b[0], a[1] * b[1]}; };
    Lattice U(2, M({{1, 1}}));
    CHECK(close_under(U, prod) == U);
    Lattice V(2, M({{1, 2}}));
    CHECK(close_under(V, prod).rank() == 2);
}
