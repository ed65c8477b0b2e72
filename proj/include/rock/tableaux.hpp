#pragma once

#include <map>
#include <vector>

#include "rock/combinatorics.hpp"
#include "rock/laurent.hpp"
#include "rock/words.hpp"

namespace rock {

// a(v,U) summed as in the degree statistic; nu already contains U
int d_U(const Partition& nu, const std::vector<Node>& U, int i, int e);

struct StandardTableau {
    SkewShape shape;
    DividedPowerWord word;
    std::vector<std::vector<Node>> fibers;  // fibers[k] = t^{-1}(k+1), top to bottom
    int degree = 0;

    std::map<Node, int> labels() const;  // 1-based
};

std::vector<StandardTableau> enumerate_std(const SkewShape& shape, const DividedPowerWord& word, int e);
// recomputed from scratch
int degree(const StandardTableau& t, int e);
// re-check of conditions (i)-(iii) on the label map
bool is_standard(const StandardTableau& t, int e);
// Σ_t q^{deg t}
LaurentPoly std_degree_poly(const SkewShape& shape, const DividedPowerWord& word, int e);
std::vector<StandardTableau> refinements(const StandardTableau& t, int e);
// every divided-power standard tableau of the shape, over all words
std::vector<StandardTableau> all_divided_tableaux(const SkewShape& shape, int e);

struct ColoredTableau {
    Multipartition shape;
    std::vector<std::vector<Node>> fibers;  // fibers[r] = T^{-1}(r+1)
};

std::vector<ColoredTableau> enumerate_colored(const Multipartition& mu, const ColoredComposition& lc);

// Inc(j) = {j, j-1}
inline bool incident(int i, int j) { return i == j || i == j - 1; }

// maps φ: [1,d] -> [1,n] x I with fibres λ_r and i in Inc(c_r) ∩ Inc(b_s)
long long matrix_count(const ColoredComposition& lc, const std::vector<int>& b, int e);
// Σ over (A,B) of Π_i |S_{β_i(A)} : S_{A,i}|
long long index_sum(const ColoredComposition& lc, const std::vector<int>& b, int e);

}  // namespace rock
