#pragma once

#include <gmpxx.h>

#include <functional>
#include <optional>
#include <vector>

namespace rock {

using BigInt = mpz_class;
using IntVector = std::vector<BigInt>;
using IntMatrix = std::vector<IntVector>;

// Row-style Hermite normal form: echelon, positive pivots, entries above each
// pivot reduced into [0, pivot); zero rows dropped. Same row lattice.
IntMatrix hnf(const IntMatrix& M);

class Lattice {
public:
    Lattice() = default;
    explicit Lattice(int ambient) : ambient_(ambient) {}
    Lattice(int ambient, const IntMatrix& generators);

    int ambient() const { return ambient_; }
    int rank() const { return static_cast<int>(basis_.size()); }
    const IntMatrix& basis() const { return basis_; }
    bool contains(const IntVector& v) const;
    // adjoin vectors; true if the lattice grew
    bool add(const IntMatrix& vs);
    friend bool operator==(const Lattice& a, const Lattice& b) { return a.ambient_ == b.ambient_ && a.basis_ == b.basis_; }

private:
    int ambient_ = 0;
    IntMatrix basis_;
};

// integer null space {x : M x = 0}, saturated
Lattice kernel(const IntMatrix& M, int columns);
// any integer x with x M = b
std::optional<IntVector> solve(const IntMatrix& M, const IntVector& b);
bool member(const Lattice& L, const IntVector& v);
// smallest lattice containing L and closed under the bilinear map
Lattice close_under(const Lattice& L, const std::function<IntVector(const IntVector&, const IntVector&)>& f);

IntVector to_big(const std::vector<long long>& v);

}  // namespace rock
