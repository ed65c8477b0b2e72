#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "rock/combinatorics.hpp"

namespace rock {

// Bijection of {1,...,d}; stored 0-based internally. Product is composition of
// maps: (g*h)(t) = g(h(t)).
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(int d);  // identity
    static Permutation from_images(const std::vector<int>& one_based);
    static Permutation simple(int d, int r);  // s_r swaps r and r+1

    int degree() const { return static_cast<int>(img_.size()); }
    int operator()(int t) const { return img_[t - 1] + 1; }  // 1-based
    int at0(int t) const { return img_[t]; }
    Permutation inverse() const;
    int length() const;
    int sign() const { return length() % 2 ? -1 : 1; }
    bool is_identity() const;
    std::vector<int> images() const;  // 1-based
    std::string to_string() const;

    friend Permutation operator*(const Permutation& g, const Permutation& h);
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> img_;
};

std::vector<Permutation> all_permutations(int d);

// blocks of the parabolic S_lambda: [start, end) 0-based
std::vector<std::pair<int, int>> composition_blocks(const Composition& lambda);
bool in_parabolic(const Permutation& g, const Composition& lambda);
// all elements of S_lambda
std::vector<Permutation> parabolic_elements(const Composition& lambda);
// inversions of g restricted to block r
int block_length(const Permutation& g, const Composition& lambda, int r);

// ^lambda D: shortest representatives of the cosets S_lambda g
std::vector<Permutation> min_coset_reps_left(const Composition& lambda);
// D^lambda: shortest representatives of the cosets g S_lambda
std::vector<Permutation> min_coset_reps_right(const Composition& lambda);
// w = h * g with h in S_lambda and g in ^lambda D
std::pair<Permutation, Permutation> factor_left(const Permutation& w, const Composition& lambda);
bool is_min_left_rep(const Permutation& g, const Composition& lambda);

}  // namespace rock
