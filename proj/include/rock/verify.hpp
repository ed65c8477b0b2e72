#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "rock/laurent.hpp"

namespace rock {

using json = nlohmann::ordered_json;

json to_json(const LaurentPoly& p);

struct Check {
    std::string name;
    bool passed = true;
    std::string detail;
    json counterexample;  // first failing instance, null when passed
};

struct SuiteReport {
    std::string suite;
    std::vector<Check> checks;
    json results = json::object();

    bool passed() const;
    // records the first failure only; later failures just flip the verdict
    void expect(const std::string& name, bool ok, const std::string& detail = {}, const json& witness = nullptr);
    const Check* first_failure() const;
    void merge(const SuiteReport& other);
};

SuiteReport verify_zigzag(int e);
SuiteReport verify_wreath(int e, int d, int samples, std::uint64_t seed);
SuiteReport verify_rock_d1(int e);
SuiteReport verify_counting(int e, int d, int n, int samples, std::uint64_t seed);
SuiteReport verify_abacus(int e, int d);
SuiteReport verify_tableaux(int e, int max_nodes);
SuiteReport verify_words(int e, int d);
SuiteReport verify_schur(int n, int d, int e, int samples, std::uint64_t seed);
SuiteReport verify_double(int n, int d, int e, int samples, std::uint64_t seed);

struct RankReport {
    LaurentPoly schur, t, dbl;
    long long degree_zero = 0;          // rank of T in degree 0
    long long degree_zero_formula = 0;  // Σ_{Λ(e-1,d)} Π_j C(n²+d_j-1, d_j)
    long long simples = 0;              // |P^J(d)|
    bool order_independent = true;      // T from reversed generator order agrees
    bool closed = true;
};
RankReport rank_report(int n, int d, int e);

// |P^J(d)| and the block cross-check: |P_{ρ,d}| = |P^I(d)|, #e-regular in P_{ρ,d} = |P^J(d)|
struct SimpleCount {
    long long pj = 0, pi = 0, block = 0, regular = 0;
};
SimpleCount simple_count(int e, int d);
bool is_e_regular(const std::vector<int>& parts, int e);

}  // namespace rock
