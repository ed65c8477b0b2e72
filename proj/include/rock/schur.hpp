#pragma once

#include <map>
#include <memory>
#include <tuple>
#include <utility>
#include <vector>

#include "rock/intlinalg.hpp"
#include "rock/laurent.hpp"
#include "rock/zigzag.hpp"

namespace rock {

// A W_d-homomorphism family: block (λ, μ) holds φ(m^λ) ∈ M^μ.
struct SchurElement {
    std::map<std::pair<int, int>, IntVector> blocks;  // (source, target) composition indices
};

class SchurAlgebra {
public:
    SchurAlgebra(int n, int d, int e);
    int n() const { return n_; }
    int d() const { return d_; }
    int e() const { return e_; }

    // Λ(n(e-1), d) with colors c0 = (1, ..., e-1)^n
    const std::vector<Composition>& compositions() const { return comps_; }
    int index_of(const Composition& lambda) const;
    const ColoredModule& module(int lambda) const { return *modules_[lambda]; }

    // Hom(M^λ, M^μ) in module degree k (vectors in M^μ coordinates)
    const Lattice& hom_space(int lambda, int mu, int k);
    LaurentPoly hom_rank(int lambda, int mu);
    LaurentPoly graded_rank();  // of S^Z(n,d)

    // ψ∘φ for φ: M^λ -> M^κ given by v ∈ M^κ, ψ: M^κ -> M^μ given by w ∈ M^μ
    IntVector compose(int kappa, int mu, const IntVector& w, const IntVector& v) const;
    SchurElement mul(const SchurElement& f, const SchurElement& g) const;  // f∘g
    SchurElement xi(int lambda) const;
    SchurElement one() const;

    // the map m^{λ̂^k} -> m^{λ̂^j} z[1] for a basis element z of e_j Z e_k
    SchurElement i_lambda(const Composition& lambda, int z) const;
    std::vector<Composition> small_compositions() const;  // Λ((n-1)(e-1), d-1)
    Composition hat(const Composition& lambda, int j) const;

    // raw check: v·(e_λ ⊗ s) = ε(s) v and v·e_λ = v
    bool is_hom(int lambda, int mu, const IntVector& v) const;
    // commutes with a wreath element: φ(m^λ w) = φ(m^λ) w via cyclicity
    int degree_of(int mu, const IntVector& v) const;  // -1 when not homogeneous

private:
    int n_, d_, e_;
    std::vector<Composition> comps_;
    std::map<Composition, int> comp_index_;
    std::vector<std::unique_ptr<ColoredModule>> modules_;
    std::map<std::tuple<int, int, int>, Lattice> hom_cache_;
};

// T^Z(n,d): per (source, target, degree) lattices
class TSubalgebra {
public:
    // generator_order reverses the generator list when true (for order-independence checks)
    TSubalgebra(SchurAlgebra& S, bool reversed_generators = false);
    const Lattice& block(int lambda, int mu, int k) const;
    LaurentPoly graded_rank() const;
    int passes() const { return passes_; }
    // post-verification: all products of basis vectors stay inside
    bool is_closed() const;
    friend bool operator==(const TSubalgebra& a, const TSubalgebra& b) { return a.lattices_ == b.lattices_; }

private:
    bool add(int lambda, int mu, int k, const IntMatrix& vs);
    SchurAlgebra& S_;
    std::map<std::tuple<int, int, int>, Lattice> lattices_;
    int passes_ = 0;
};

}  // namespace rock
