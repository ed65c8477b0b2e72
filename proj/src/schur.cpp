#include "rock/schur.hpp"

#include <algorithm>

#include "rock/errors.hpp"

namespace rock {

namespace {

IntVector zero_vec(int n) { return IntVector(static_cast<std::size_t>(n), BigInt(0)); }

bool is_zero_vec(const IntVector& v) {
    return std::all_of(v.begin(), v.end(), [](const BigInt& x) { return x == 0; });
}

}  // namespace

SchurAlgebra::SchurAlgebra(int n, int d, int e) : n_(n), d_(d), e_(e) {
    if (n < 1) throw PreconditionError("n must be positive");
    if (d < 0) throw PreconditionError("d must be non-negative");
    if (e < 2) throw PreconditionError("e must be at least 2");
    comps_ = rock::compositions(n * (e - 1), d);
    std::vector<int> colors;
    for (int r = 0; r < n * (e - 1); ++r) colors.push_back(r % (e - 1) + 1);
    for (std::size_t k = 0; k < comps_.size(); ++k) {
        comp_index_[comps_[k]] = static_cast<int>(k);
        modules_.push_back(std::make_unique<ColoredModule>(ColoredComposition(comps_[k], colors, e), e));
    }
}

int SchurAlgebra::index_of(const Composition& lambda) const {
    auto it = comp_index_.find(lambda);
    if (it == comp_index_.end()) throw PreconditionError("composition " + lambda.to_string() + " is not in the index set");
    return it->second;
}

const Lattice& SchurAlgebra::hom_space(int lambda, int mu, int k) {
    auto key = std::make_tuple(lambda, mu, k);
    auto it = hom_cache_.find(key);
    if (it != hom_cache_.end()) return it->second;

    const auto& src = module(lambda);
    const auto& dst = module(mu);
    const auto& lc = src.lc();
    WreathKey idem = src.idempotent_times(Permutation(d_));

    // candidates: degree k basis vectors fixed by e_λ
    std::vector<int> cand;
    for (int b = 0; b < dst.dim(); ++b) {
        if (dst.degree(b) != k) continue;
        auto s = dst.act(b, idem);
        if (s.index == b && s.sign == 1) cand.push_back(b);
    }

    IntMatrix eqs;
    for (const auto& [lo, hi] : composition_blocks(lc.lambda)) {
        for (int t = lo; t + 1 < hi; ++t) {
            Permutation s = Permutation::simple(d_, t + 1);
            WreathKey w = src.idempotent_times(s);
            int eps = epsilon(lc, s);
            std::map<int, IntVector> rows;
            auto row = [&](int target) -> IntVector& {
                auto r = rows.find(target);
                if (r == rows.end()) r = rows.emplace(target, zero_vec(static_cast<int>(cand.size()))).first;
                return r->second;
            };
            for (std::size_t c = 0; c < cand.size(); ++c) {
                auto a = dst.act(cand[c], w);
                if (a.index >= 0) row(a.index)[c] += a.sign;
                row(cand[c])[c] -= eps;
            }
            for (auto& [_, r] : rows)
                if (!is_zero_vec(r)) eqs.push_back(std::move(r));
        }
    }
    Lattice ker = kernel(eqs, static_cast<int>(cand.size()));
    IntMatrix full;
    for (const auto& v : ker.basis()) {
        IntVector f = zero_vec(dst.dim());
        for (std::size_t c = 0; c < cand.size(); ++c) f[cand[c]] = v[c];
        full.push_back(std::move(f));
    }
    return hom_cache_.emplace(key, Lattice(dst.dim(), full)).first->second;
}

LaurentPoly SchurAlgebra::hom_rank(int lambda, int mu) {
    LaurentPoly p;
    for (int k = 0; k <= 2 * d_; ++k) p.add_term(k, hom_space(lambda, mu, k).rank());
    return p;
}

LaurentPoly SchurAlgebra::graded_rank() {
    LaurentPoly p;
    int m = static_cast<int>(comps_.size());
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) p += hom_rank(a, b);
    return p;
}

IntVector SchurAlgebra::compose(int kappa, int mu, const IntVector& w, const IntVector& v) const {
    const auto& mid = module(kappa);
    const auto& dst = module(mu);
    IntVector r = zero_vec(dst.dim());
    for (int b = 0; b < mid.dim(); ++b) {
        if (v[b] == 0) continue;
        // ψ(b) = ψ(m^κ) · key_b
        const WreathKey& key = mid.basis()[b];
        for (int c = 0; c < dst.dim(); ++c) {
            if (w[c] == 0) continue;
            auto a = dst.act(c, key);
            if (a.index >= 0) r[a.index] += v[b] * w[c] * a.sign;
        }
    }
    return r;
}

SchurElement SchurAlgebra::mul(const SchurElement& f, const SchurElement& g) const {
    SchurElement r;
    for (const auto& [gk, v] : g.blocks)
        for (const auto& [fk, w] : f.blocks) {
            if (fk.first != gk.second) continue;
            IntVector p = compose(gk.second, fk.second, w, v);
            auto key = std::make_pair(gk.first, fk.second);
            auto it = r.blocks.find(key);
            if (it == r.blocks.end())
                r.blocks.emplace(key, std::move(p));
            else
                for (std::size_t t = 0; t < p.size(); ++t) it->second[t] += p[t];
        }
    for (auto it = r.blocks.begin(); it != r.blocks.end();)
        it = is_zero_vec(it->second) ? r.blocks.erase(it) : std::next(it);
    return r;
}

SchurElement SchurAlgebra::xi(int lambda) const {
    const auto& M = module(lambda);
    IntVector v = zero_vec(M.dim());
    v[M.generator()] = 1;
    SchurElement r;
    r.blocks.emplace(std::make_pair(lambda, lambda), std::move(v));
    return r;
}

SchurElement SchurAlgebra::one() const {
    SchurElement r;
    for (std::size_t k = 0; k < comps_.size(); ++k) {
        auto x = xi(static_cast<int>(k));
        r.blocks.insert(x.blocks.begin(), x.blocks.end());
    }
    return r;
}

Composition SchurAlgebra::hat(const Composition& lambda, int j) const {
    if (j < 1 || j >= e_) throw PreconditionError("vertex outside J");
    Composition r;
    r.parts.assign(e_ - 1, 0);
    r.parts[j - 1] = 1;
    r.parts.insert(r.parts.end(), lambda.parts.begin(), lambda.parts.end());
    return r;
}

std::vector<Composition> SchurAlgebra::small_compositions() const {
    if (d_ < 1) return {};
    return rock::compositions((n_ - 1) * (e_ - 1), d_ - 1);
}

SchurElement SchurAlgebra::i_lambda(const Composition& lambda, int z) const {
    const auto& Z = module(0).W().Z();
    const auto& zb = Z.elem(z);
    int src = index_of(hat(lambda, zb.right));
    int dst = index_of(hat(lambda, zb.left));
    const auto& M = module(dst);
    std::vector<std::int64_t> m(M.dim(), 0);
    m[M.generator()] = 1;
    auto img = M.act(m, M.W().at(z, 1));
    IntVector v = zero_vec(M.dim());
    for (int b = 0; b < M.dim(); ++b) v[b] = img[b];
    SchurElement r;
    r.blocks.emplace(std::make_pair(src, dst), std::move(v));
    return r;
}

bool SchurAlgebra::is_hom(int lambda, int mu, const IntVector& v) const {
    const auto& src = module(lambda);
    const auto& dst = module(mu);
    const auto& lc = src.lc();
    auto apply = [&](const WreathKey& w) {
        IntVector r = zero_vec(dst.dim());
        for (int c = 0; c < dst.dim(); ++c) {
            if (v[c] == 0) continue;
            auto a = dst.act(c, w);
            if (a.index >= 0) r[a.index] += v[c] * a.sign;
        }
        return r;
    };
    if (apply(src.idempotent_times(Permutation(d_))) != v) return false;
    for (const auto& [lo, hi] : composition_blocks(lc.lambda))
        for (int t = lo; t + 1 < hi; ++t) {
            Permutation s = Permutation::simple(d_, t + 1);
            IntVector r = apply(src.idempotent_times(s));
            int eps = epsilon(lc, s);
            for (std::size_t c = 0; c < r.size(); ++c)
                if (r[c] != eps * v[c]) return false;
        }
    return true;
}

int SchurAlgebra::degree_of(int mu, const IntVector& v) const {
    int deg = -1;
    for (int b = 0; b < module(mu).dim(); ++b) {
        if (v[b] == 0) continue;
        int k = module(mu).degree(b);
        if (deg >= 0 && k != deg) return -1;
        deg = k;
    }
    return deg < 0 ? 0 : deg;
}

TSubalgebra::TSubalgebra(SchurAlgebra& S, bool reversed_generators) : S_(S) {
    struct Gen {
        int lambda, mu, k;
        IntVector v;
    };
    std::vector<Gen> gens;
    int m = static_cast<int>(S.compositions().size());
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            for (const auto& v : S.hom_space(a, b, 0).basis()) gens.push_back({a, b, 0, v});
    const auto& Z = S.module(0).W().Z();
    for (const auto& lam : S.small_compositions())
        for (int z = 0; z < Z.dim(); ++z) {
            auto x = S.i_lambda(lam, z);
            for (auto& [key, v] : x.blocks) gens.push_back({key.first, key.second, Z.elem(z).degree, v});
        }
    if (reversed_generators) std::reverse(gens.begin(), gens.end());
    for (const auto& g : gens) {
        if (!S.is_hom(g.lambda, g.mu, g.v)) throw InvariantError("generator is not a homomorphism");
        add(g.lambda, g.mu, g.k, {g.v});
    }

    const int cap = 4 * (2 * S.d() + 1) * m * m + 64;
    for (passes_ = 1;; ++passes_) {
        if (passes_ > cap) throw InvariantError("T closure did not stabilize");
        bool grew = false;
        auto snapshot = lattices_;
        for (const auto& [kg, Lg] : snapshot) {
            auto [lam, kap, k2] = kg;
            for (const auto& [kf, Lf] : snapshot) {
                auto [kap2, mu, k1] = kf;
                if (kap2 != kap || k1 + k2 > 2 * S.d()) continue;
                IntMatrix prods;
                for (const auto& v : Lg.basis())
                    for (const auto& w : Lf.basis()) prods.push_back(S.compose(kap, mu, w, v));
                if (add(lam, mu, k1 + k2, prods)) grew = true;
            }
        }
        if (!grew) break;
    }
}

bool TSubalgebra::add(int lambda, int mu, int k, const IntMatrix& vs) {
    auto key = std::make_tuple(lambda, mu, k);
    auto it = lattices_.find(key);
    if (it == lattices_.end()) it = lattices_.emplace(key, Lattice(S_.module(mu).dim())).first;
    return it->second.add(vs);
}

const Lattice& TSubalgebra::block(int lambda, int mu, int k) const {
    static const Lattice empty;
    auto it = lattices_.find(std::make_tuple(lambda, mu, k));
    return it == lattices_.end() ? empty : it->second;
}

LaurentPoly TSubalgebra::graded_rank() const {
    LaurentPoly p;
    for (const auto& [key, L] : lattices_) p.add_term(std::get<2>(key), L.rank());
    return p;
}

bool TSubalgebra::is_closed() const {
    for (const auto& [kg, Lg] : lattices_) {
        auto [lam, kap, k2] = kg;
        for (const auto& [kf, Lf] : lattices_) {
            auto [kap2, mu, k1] = kf;
            if (kap2 != kap) continue;
            for (const auto& v : Lg.basis())
                for (const auto& w : Lf.basis()) {
                    IntVector p = S_.compose(kap, mu, w, v);
                    if (is_zero_vec(p)) continue;
                    if (!block(lam, mu, k1 + k2).contains(p)) return false;
                }
        }
    }
    return true;
}

}  // namespace rock
