#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "rock/combinatorics.hpp"
#include "rock/laurent.hpp"

namespace rock {

using Word = std::vector<int>;

std::vector<int> word_weight(const Word& w, int e);
std::string word_to_string(const Word& w);
Word parse_word(const std::string& text);

struct DividedPowerWord {
    std::vector<std::pair<int, int>> terms;  // (residue, multiplicity)

    DividedPowerWord() = default;
    explicit DividedPowerWord(std::vector<std::pair<int, int>> t) : terms(std::move(t)) {}
    static DividedPowerWord plain(const Word& w);
    // "0^2,1", "0(2) 1" or plain "0,1"
    static DividedPowerWord parse(const std::string& text);

    Word hat() const;
    int length() const;  // Σ m
    int angle() const;   // ⟨i⟩ = Σ m(m-1)/2
    std::vector<int> weight(int e) const;
    DividedPowerWord shifted(int kappa, int e) const;
    DividedPowerWord concat(const DividedPowerWord& other) const;
    LaurentPoly factorial() const;  // i! = Π [m]!
    std::string to_string() const;

    friend auto operator<=>(const DividedPowerWord&, const DividedPowerWord&) = default;
};

inline LaurentPoly dpw_factorial(const DividedPowerWord& w) { return w.factorial(); }

// I^{δ,j}: 0·k·j with k a shuffle of (1..j-1) and (e-1..j+1)
std::vector<Word> delta_words(int e, int j);
// (0, 1, ..., j-1, e-1, ..., j+1, j)
Word canonical_lj(int e, int j);
// (0, e-1, ..., j+1, 1, ..., j-1, j): the other extreme shuffle
Word reversed_lj(int e, int j);

// a fixed choice of l^j for every j in J (index j-1)
struct LjChoice {
    int e = 2;
    std::vector<Word> words;

    static LjChoice canonical(int e);
    static LjChoice reversed(int e);
    const Word& operator()(int j) const { return words.at(j - 1); }
};

// l^j(m): each entry of l^j with multiplicity m
DividedPowerWord inflate(const Word& lj, int m);
DividedPowerWord gg_word(const ColoredComposition& lc, const LjChoice& lj);
DividedPowerWord gg_word(const ColoredComposition& lc, int e);
int a_lambda(const ColoredComposition& lc, int e);

// Φ'_+: the roots α_a + ... + α_b with 1 <= a <= b <= e-1, as weight vectors
std::vector<std::vector<int>> finite_positive_roots(int e);
// weight in the monoid generated by nδ - β (n >= 1) and δ
bool in_cone_below_delta(const std::vector<int>& weight, int e);
// weight in the monoid generated by β + nδ (n >= 0) and δ
bool in_cone_above_delta(const std::vector<int>& weight, int e);
// throws DomainError when the weight is not a multiple of δ
bool is_separated(const Word& w, int e);

std::set<Word> semicuspidal_words(int e, int d);
bool is_semicuspidal(const Word& w, int e);

}  // namespace rock
