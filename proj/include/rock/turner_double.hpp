#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "rock/laurent.hpp"

namespace rock {

// X = M_n(P_Q), P_Q the path algebra of the linear quiver 1 -> 2 -> ... -> e-1
// modulo paths of length two; vertices even of degree 0, arrows odd of degree 1.
class MatrixPathAlgebra {
public:
    MatrixPathAlgebra(int n, int e);
    int n() const { return n_; }
    int e() const { return e_; }
    int dim() const { return n_ * n_ * pdim_; }
    int path_dim() const { return pdim_; }
    int degree(int x) const { return path_deg_[x % pdim_]; }
    int parity(int x) const { return degree(x) % 2; }
    int mul(int x, int y) const;  // basis index or -1
    std::vector<int> unit_terms() const;  // 1_X = Σ of these basis elements
    std::string name(int x) const;

private:
    int n_, e_, pdim_;
    std::vector<int> path_deg_, path_left_, path_right_;
    std::vector<std::string> path_name_;
};

using Tuple = std::vector<int>;
using Sparse = std::map<Tuple, std::int64_t>;

// Inv^f X = (X^{⊗f})^{S_f} under signed place permutations, with the orbit-sum
// basis u_A indexed by canonical tuples A (nondecreasing, odd entries distinct).
class InvariantAlgebra {
public:
    explicit InvariantAlgebra(const MatrixPathAlgebra& X) : X_(X) {}
    const MatrixPathAlgebra& X() const { return X_; }
    const std::vector<Tuple>& basis(int f);
    static bool canonical(const MatrixPathAlgebra& X, const Tuple& a);
    // u_A as a vector of X^{⊗f}
    Sparse orbit(const Tuple& a) const;
    int degree(const Tuple& a) const;
    int parity(const Tuple& a) const;
    const Sparse& mul(const Tuple& a, const Tuple& b);
    // Δ(u_A) components in Inv^p ⊗ Inv^{f-p}
    const std::vector<std::tuple<Tuple, Tuple, std::int64_t>>& coproduct(const Tuple& a, int p);

private:
    const MatrixPathAlgebra& X_;
    std::map<int, std::vector<Tuple>> bases_;
    std::map<std::pair<Tuple, Tuple>, Sparse> mul_cache_;
    std::map<std::pair<Tuple, int>, std::vector<std::tuple<Tuple, Tuple, std::int64_t>>> cop_cache_;
};

struct DoubleKey {
    Tuple inv;   // u_A in Inv^f X
    Tuple dual;  // u_B^* in (Inv^{d-f} X)^*
    friend auto operator<=>(const DoubleKey&, const DoubleKey&) = default;
};
using DoubleElement = std::map<DoubleKey, std::int64_t>;

// D^d X = ⊕_f Inv^f X ⊗ (Inv^{d-f} X)^*
class DoubleAlgebra {
public:
    DoubleAlgebra(int n, int d, int e, bool dual_koszul = true);
    int d() const { return d_; }
    const MatrixPathAlgebra& X() const { return X_; }
    std::vector<DoubleKey> basis();
    int degree(const DoubleKey& k) const;
    LaurentPoly graded_rank();
    DoubleElement one();
    DoubleElement mul(const DoubleKey& a, const DoubleKey& b);
    DoubleElement mul(const DoubleElement& a, const DoubleElement& b);
    std::string to_string(const DoubleElement& x) const;

    // (u_P^*)(u_R^*) in the dual algebra
    Sparse dual_mul(const Tuple& p, const Tuple& r) const;
    Sparse act_left(const Tuple& b, const Tuple& e);   // u_B^* · u_E
    Sparse act_right(const Tuple& f, const Tuple& b);  // u_F · u_B^*

private:
    MatrixPathAlgebra X_;
    InvariantAlgebra inv_;
    int d_;
    bool dual_koszul_;
    std::map<std::pair<DoubleKey, DoubleKey>, DoubleElement> cache_;
};

void add_to(DoubleElement& acc, const DoubleKey& k, std::int64_t c);

}  // namespace rock
