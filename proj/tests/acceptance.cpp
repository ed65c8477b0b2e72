#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "rock/verify.hpp"

using namespace rock;

namespace {

struct Outcome {
    bool pass = true;
    std::string note;
};

void absorb(Outcome& o, const SuiteReport& r, const std::string& where) {
    if (r.passed()) return;
    if (o.pass) {
        const Check* c = r.first_failure();
        o.note = where + " " + c->name + ": " + c->detail;
    }
    o.pass = false;
}

}  // namespace

int main() {
    const std::uint64_t seed = 0;
    std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"zigzag graded dimension and relations, e=2..6",
         [] {
             Outcome o;
             for (int e = 2; e <= 6; ++e) absorb(o, verify_zigzag(e), "e=" + std::to_string(e));
             return o;
         }},
        {"wreath and module dimensions, e=2..4, d=1..3",
         [&] {
             Outcome o;
             for (int e = 2; e <= 4; ++e)
                 for (int d = 1; d <= 3; ++d)
                     absorb(o, verify_wreath(e, d, 50, seed), "e=" + std::to_string(e) + " d=" + std::to_string(d));
             return o;
         }},
        {"d=1 RoCK table, e=2..5",
         [] {
             Outcome o;
             for (int e = 2; e <= 5; ++e) absorb(o, verify_rock_d1(e), "e=" + std::to_string(e));
             return o;
         }},
        {"counting chain, e=2..4, d=1..3, n<=3",
         [&] {
             Outcome o;
             for (int e = 2; e <= 4; ++e)
                 for (int d = 1; d <= 3; ++d)
                     absorb(o, verify_counting(e, d, 3, 30, seed), "e=" + std::to_string(e) + " d=" + std::to_string(d));
             return o;
         }},
        {"abacus, quotients and hooks, e=2..4, d=1..3",
         [] {
             Outcome o;
             for (int e = 2; e <= 4; ++e)
                 for (int d = 1; d <= 3; ++d)
                     absorb(o, verify_abacus(e, d), "e=" + std::to_string(e) + " d=" + std::to_string(d));
             return o;
         }},
        {"tableau refinement identity (<=9 nodes) and hook tableaux (e<=5)",
         [] {
             Outcome o;
             for (int e = 2; e <= 5; ++e) absorb(o, verify_tableaux(e, 9), "e=" + std::to_string(e));
             return o;
         }},
        {"semicuspidal and separated words",
         [] {
             Outcome o;
             absorb(o, verify_words(2, 2), "e=2 d=2");
             absorb(o, verify_words(5, 2), "e=5 d=2");
             for (int e = 3; e <= 4; ++e)
                 for (int d = 1; d <= 2; ++d)
                     absorb(o, verify_words(e, d), "e=" + std::to_string(e) + " d=" + std::to_string(d));
             return o;
         }},
        {"Schur algebra, T and Turner double for (e,n,d) in {(2,1,1),(2,2,2),(3,2,2)}",
         [&] {
             Outcome o;
             for (auto [e, n, d] : {std::tuple{2, 1, 1}, std::tuple{2, 2, 2}, std::tuple{3, 2, 2}}) {
                 std::string w = "e=" + std::to_string(e) + " n=" + std::to_string(n) + " d=" + std::to_string(d);
                 auto s = verify_schur(n, d, e, 50, seed);
                 auto dbl = verify_double(n, d, e, 200, seed);
                 absorb(o, s, w);
                 absorb(o, dbl, w);
                 std::printf("  %s: T %s | D %s\n", w.c_str(), s.results["T_rank"].dump().c_str(), dbl.results["rank"].dump().c_str());
             }
             return o;
         }},
        {"simple count |P^J(d)| against e-regular partitions in the block",
         [] {
             Outcome o;
             for (int e = 2; e <= 4; ++e)
                 for (int d = 1; d <= 3; ++d) {
                     auto c = simple_count(e, d);
                     bool ok = c.block == c.pi && c.regular == c.pj;
                     std::printf("  e=%d d=%d: |P^J(d)|=%lld |P^I(d)|=%lld block=%lld e-regular=%lld\n", e, d, c.pj, c.pi,
                                 c.block, c.regular);
                     if (!ok && o.pass) o.note = "e=" + std::to_string(e) + " d=" + std::to_string(d) + " mismatch";
                     o.pass = o.pass && ok;
                 }
             return o;
         }},
    };
    int failures = 0;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[k].second();
        } catch (const std::exception& ex) {
            o = {false, std::string("exception: ") + ex.what()};
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("criterion %zu: %s - %s (%.2fs)%s%s\n", k + 1, o.pass ? "PASS" : "FAIL", criteria[k].first.c_str(), secs,
                    o.note.empty() ? "" : " :: ", o.note.c_str());
        std::fflush(stdout);
        if (!o.pass) ++failures;
    }
    return failures == 0 ? 0 : 1;
}
