#include <doctest.h>

#include <random>
#include <set>

#include "rock/abacus.hpp"
#include "rock/errors.hpp"

using namespace rock;

namespace {

// repeated rim-hook removal: the rim hook at (r,s) with bottom row b leaves
// μ_k = λ_{k+1} - 1 for r <= k < b and μ_b = s - 1
Partition core_by_rim_hooks(Partition lam, int e, int& removed) {
    removed = 0;
    while (true) {
        auto conj = lam.conjugate();
        bool found = false;
        for (int r = 1; r <= lam.length() && !found; ++r)
            for (int s = 1; s <= lam.row(r) && !found; ++s) {
                int b = conj.row(s);
                if (lam.row(r) - s + b - r + 1 != e) continue;
                std::vector<int> parts = lam.parts();
                for (int k = r; k < b; ++k) parts[k - 1] = lam.row(k + 1) - 1;
                parts[b - 1] = s - 1;
                lam = Partition(parts);
                found = true;
            }
        if (!found) return lam;
        ++removed;
    }
}

}  // namespace

TEST_CASE("abacus displays") {
    CHECK(abacus_of(Partition(), 3, 2).beads() == std::vector<long>{2, 1, 0});
    CHECK(abacus_of(Partition({3, 1}), 2, 2).beads() == std::vector<long>{4, 1});
    std::mt19937 rng(7);
    auto all = partitions_up_to(10);
    for (int k = 0; k < 100; ++k) {
        const auto& lam = all[rng() % all.size()];
        for (int N = lam.length(); N < lam.length() + 4; ++N) CHECK(partition_of(abacus_of(lam, N, 3)) == lam);
    }
}

TEST_CASE("bead node duality") {
    auto A = abacus_of(Partition({3, 1}), 5, 2);
    CHECK(bead_node_duality(A, 1, 3));
    CHECK_FALSE(bead_node_duality(A, 2, 2));
    auto E = abacus_of(Partition(), 5, 2);
    for (int r = 1; r <= 5; ++r)
        for (int s = 1; s <= 5; ++s) CHECK_FALSE(bead_node_duality(E, r, s));
}

TEST_CASE("core and quotient") {
    auto cq = core_quotient_weight(Partition({3, 1}), 2, 2);
    CHECK(cq.core.empty());
    CHECK(cq.weight == 2);
    CHECK(cq.quotient == Multipartition({Partition({2}), Partition()}));
    auto c2 = core_quotient_weight(Partition({2, 1}), 2, 2);
    CHECK(c2.weight == 0);
    CHECK(c2.core == Partition({2, 1}));
    for (int e = 2; e <= 4; ++e)
        for (const auto& lam : partitions_up_to(9)) {
            int removed = 0;
            auto core = core_by_rim_hooks(lam, e, removed);
            auto q = core_quotient_weight(lam, lam.length() + 3, e);
            CHECK(q.core == core);
            CHECK(q.weight == removed);
            // weight independent of N
            CHECK(core_quotient_weight(lam, lam.length() + 3 + e, e).weight == q.weight);
        }
}

TEST_CASE("quotient bijection for the empty 2-core") {
    auto block = partitions_in_block(Partition(), 2, 2);
    CHECK(block.size() == 5);
    std::set<Multipartition> qs;
    for (const auto& mu : block) {
        CHECK(mu.size() == 4);
        qs.insert(core_quotient_weight(mu, 4, 2).quotient);
    }
    CHECK(qs.size() == 5);
    CHECK(partitions_in_block(Partition({1}), 0, 2) == std::vector<Partition>{Partition({1})});
}

TEST_CASE("Rouquier cores") {
    for (int e = 2; e <= 5; ++e) CHECK(is_rouquier_core(Partition(), 1, e).has_value());
    auto r = is_rouquier_core(Partition({1}), 2, 2);
    REQUIRE(r.has_value());
    CHECK(r->kappa == 1);
    auto [N, b] = minimal_witness(*r);
    CHECK(N == 3);
    CHECK(b == std::vector<int>{1, 2});
    for (int e = 2; e <= 5; ++e)
        for (int d = 1; d <= 3; ++d) {
            auto c = make_rouquier_core(e, d);
            CHECK(is_core(c.rho, e));
            CHECK(is_rouquier_core(c.rho, d, e).has_value());
            for (int i = 0; i + 1 < e; ++i) CHECK(c.runner_counts[i + 1] >= c.runner_counts[i] + d - 1);
        }
}

TEST_CASE("hooks") {
    auto core = *is_rouquier_core(Partition({1}), 2, 2);
    for (int r = 1; r <= 2; ++r)
        for (int s = 1; s <= 2; ++s)
            for (int i = 0; i < 2; ++i) {
                Hook h = hook(r, s, i, core);
                CHECK(static_cast<int>(h.nodes().size()) == 2);
                CHECK(((h.y - h.x) % 2 + 2) % 2 == core.kappa);
                CHECK(is_right_extension(hook(r, s + 1, i, core), h));
                CHECK(is_bottom_extension(hook(r + 1, s, i, core), h));
            }
    CHECK(hook_decomposition(Partition({1}), core).empty());
    for (const auto& mu : partitions_in_block(core, 2)) CHECK(hook_decomposition(mu, core).size() == 2);
    CHECK_THROWS_AS(hook_decomposition(Partition({2}), core), DomainError);
}
