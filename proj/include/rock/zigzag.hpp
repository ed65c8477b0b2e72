#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rock/combinatorics.hpp"
#include "rock/laurent.hpp"
#include "rock/permutation.hpp"

namespace rock {

struct ZigzagBasisElem {
    enum class Kind { Vertex, Arrow, Loop };
    Kind kind = Kind::Vertex;
    int left = 1;   // e_left * x = x
    int right = 1;  // x * e_right = x
    int degree = 0;
    std::string name() const;
};

// Z for a fixed e; for e = 2 the basis is {e_1 = 1, c}
class Zigzag {
public:
    explicit Zigzag(int e);
    int e() const { return e_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    const std::vector<ZigzagBasisElem>& basis() const { return basis_; }
    const ZigzagBasisElem& elem(int k) const { return basis_[k]; }
    // product of basis elements: a basis index or -1 for zero
    int mul(int x, int y) const { return table_[x * dim() + y]; }
    int vertex(int j) const;               // e_j
    int loop(int j) const;                 // c e_j
    int arrow(int k, int j) const;         // a^{k,j}: from j to k; -1 if not neighbours
    std::vector<int> left_truncated(int j) const;  // basis of e_j Z
    LaurentPoly graded_dim() const;

private:
    int e_;
    std::vector<ZigzagBasisElem> basis_;
    std::vector<int> table_;
};

LaurentPoly graded_dim_Z(int e);
int dim_ejZ(int j, int e);

struct WreathKey {
    std::vector<std::uint8_t> z;  // zigzag basis index at each tensor position
    Permutation g;

    friend auto operator<=>(const WreathKey&, const WreathKey&) = default;
};

using WreathElement = std::map<WreathKey, std::int64_t>;

class Wreath {
public:
    Wreath(int e, int d);
    const Zigzag& Z() const { return Z_; }
    int d() const { return d_; }
    int e() const { return Z_.e(); }

    // (x g)(y h) = (x · y^{g^{-1}}) gh, with (y^{g^{-1}})_t = y_{g^{-1}(t)}
    std::optional<WreathKey> mul_keys(const WreathKey& a, const WreathKey& b) const;
    WreathElement mul(const WreathElement& a, const WreathElement& b) const;
    WreathElement one() const;
    WreathElement tensor(const std::vector<int>& z) const;  // z ⊗ id
    WreathElement perm(const Permutation& g) const;          // 1 ⊗ g
    WreathElement at(int zb, int a) const;                   // x[a]
    int degree(const WreathKey& k) const;
    std::vector<WreathKey> basis() const;
    long long basis_count() const;

private:
    Zigzag Z_;
    int d_;
};

void add_to(WreathElement& acc, const WreathKey& k, std::int64_t c);

// ε_{λ,c}(g) for g in S_λ
int epsilon(const ColoredComposition& lc, const Permutation& g);

// M_{λ,c} = alt ⊗ e_{λ,c} W_d with basis (z, g), g in ^λD, z_t in e_{c(block t)} B_Z
class ColoredModule {
public:
    ColoredModule(const ColoredComposition& lc, int e);
    const ColoredComposition& lc() const { return lc_; }
    const Wreath& W() const { return W_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    const std::vector<WreathKey>& basis() const { return basis_; }
    int index_of(const WreathKey& k) const;  // -1 if absent
    int degree(int b) const { return W_.degree(basis_[b]); }
    // block color of each tensor position
    const std::vector<int>& position_colors() const { return pos_color_; }

    struct Signed {
        int index;  // -1 for zero
        int sign;
    };
    // basis element b times a wreath basis key
    Signed act(int b, const WreathKey& w) const;
    std::vector<std::int64_t> act(const std::vector<std::int64_t>& v, const WreathElement& w) const;
    // generator m_{λ,c} as a basis index
    int generator() const;
    // e_{λ,c} ⊗ g
    WreathKey idempotent_times(const Permutation& g) const;

private:
    ColoredComposition lc_;
    Wreath W_;
    std::vector<int> pos_color_;
    std::vector<WreathKey> basis_;
    std::map<WreathKey, int> index_;
};

}  // namespace rock
