#include "rock/turner_double.hpp"

#include <algorithm>
#include <functional>

#include "rock/errors.hpp"

namespace rock {

namespace {

void bump(Sparse& s, const Tuple& t, std::int64_t c) {
    if (c == 0) return;
    auto [it, ins] = s.emplace(t, c);
    if (!ins) {
        it->second += c;
        if (it->second == 0) s.erase(it);
    }
}

}  // namespace

MatrixPathAlgebra::MatrixPathAlgebra(int n, int e) : n_(n), e_(e) {
    if (n < 1) throw PreconditionError("n must be positive");
    if (e < 2) throw PreconditionError("e must be at least 2");
    for (int j = 1; j < e; ++j) {
        path_deg_.push_back(0);
        path_left_.push_back(j);
        path_right_.push_back(j);
        path_name_.push_back("v" + std::to_string(j));
    }
    // α_j : j -> j+1, written e_{j+1} α_j e_j
    for (int j = 1; j + 1 < e; ++j) {
        path_deg_.push_back(1);
        path_left_.push_back(j + 1);
        path_right_.push_back(j);
        path_name_.push_back("a" + std::to_string(j));
    }
    pdim_ = static_cast<int>(path_deg_.size());
}

int MatrixPathAlgebra::mul(int x, int y) const {
    int px = x / pdim_, ax = x % pdim_;
    int py = y / pdim_, ay = y % pdim_;
    int p = px / n_, q = px % n_;
    int r = py / n_, s = py % n_;
    if (q != r) return -1;
    if (path_right_[ax] != path_left_[ay]) return -1;
    int a;
    if (path_deg_[ax] == 0)
        a = ay;
    else if (path_deg_[ay] == 0)
        a = ax;
    else
        return -1;
    return (p * n_ + s) * pdim_ + a;
}

std::vector<int> MatrixPathAlgebra::unit_terms() const {
    std::vector<int> out;
    for (int p = 0; p < n_; ++p)
        for (int j = 0; j < e_ - 1; ++j) out.push_back((p * n_ + p) * pdim_ + j);
    return out;
}

std::string MatrixPathAlgebra::name(int x) const {
    int pq = x / pdim_;
    return "E" + std::to_string(pq / n_ + 1) + std::to_string(pq % n_ + 1) + path_name_[x % pdim_];
}

bool InvariantAlgebra::canonical(const MatrixPathAlgebra& X, const Tuple& a) {
    for (std::size_t t = 0; t + 1 < a.size(); ++t) {
        if (a[t] > a[t + 1]) return false;
        if (a[t] == a[t + 1] && X.parity(a[t])) return false;
    }
    return true;
}

const std::vector<Tuple>& InvariantAlgebra::basis(int f) {
    auto it = bases_.find(f);
    if (it != bases_.end()) return it->second;
    std::vector<Tuple> out;
    Tuple cur;
    std::function<void(int)> rec = [&](int lo) {
        if (static_cast<int>(cur.size()) == f) {
            out.push_back(cur);
            return;
        }
        for (int x = lo; x < X_.dim(); ++x) {
            cur.push_back(x);
            rec(X_.parity(x) ? x + 1 : x);
            cur.pop_back();
        }
    };
    rec(0);
    return bases_.emplace(f, std::move(out)).first->second;
}

int InvariantAlgebra::degree(const Tuple& a) const {
    int s = 0;
    for (int x : a) s += X_.degree(x);
    return s;
}

int InvariantAlgebra::parity(const Tuple& a) const { return degree(a) % 2; }

Sparse InvariantAlgebra::orbit(const Tuple& a) const {
    Sparse out;
    Tuple cur = a;
    std::sort(cur.begin(), cur.end());
    do {
        int inv = 0;
        for (std::size_t s = 0; s < cur.size(); ++s)
            for (std::size_t t = s + 1; t < cur.size(); ++t)
                if (cur[s] > cur[t] && X_.parity(cur[s]) && X_.parity(cur[t])) ++inv;
        out[cur] = inv % 2 ? -1 : 1;
    } while (std::next_permutation(cur.begin(), cur.end()));
    return out;
}

const Sparse& InvariantAlgebra::mul(const Tuple& a, const Tuple& b) {
    auto key = std::make_pair(a, b);
    auto it = mul_cache_.find(key);
    if (it != mul_cache_.end()) return it->second;
    if (a.size() != b.size()) throw PreconditionError("invariants of different tensor length");
    Sparse full;
    auto oa = orbit(a);
    auto ob = orbit(b);
    for (const auto& [x, cx] : oa)
        for (const auto& [y, cy] : ob) {
            Tuple z(x.size());
            bool zero = false;
            for (std::size_t t = 0; t < x.size() && !zero; ++t) {
                int p = X_.mul(x[t], y[t]);
                zero = p < 0;
                z[t] = p;
            }
            if (zero) continue;
            // Koszul sign Σ_{s>t} x̄_s ȳ_t
            int odd_pairs = 0;
            for (std::size_t s = 0; s < x.size(); ++s)
                for (std::size_t t = 0; t < s; ++t) odd_pairs += X_.parity(x[s]) * X_.parity(y[t]);
            bump(full, z, cx * cy * (odd_pairs % 2 ? -1 : 1));
        }
    Sparse out;
    for (const auto& [z, c] : full)
        if (canonical(X_, z)) out[z] = c;
    return mul_cache_.emplace(key, std::move(out)).first->second;
}

const std::vector<std::tuple<Tuple, Tuple, std::int64_t>>& InvariantAlgebra::coproduct(const Tuple& a, int p) {
    auto key = std::make_pair(a, p);
    auto it = cop_cache_.find(key);
    if (it != cop_cache_.end()) return it->second;
    std::vector<std::tuple<Tuple, Tuple, std::int64_t>> out;
    if (p >= 0 && p <= static_cast<int>(a.size())) {
        for (const auto& [x, c] : orbit(a)) {
            Tuple l(x.begin(), x.begin() + p), r(x.begin() + p, x.end());
            if (canonical(X_, l) && canonical(X_, r)) out.emplace_back(l, r, c);
        }
    }
    return cop_cache_.emplace(key, std::move(out)).first->second;
}

void add_to(DoubleElement& acc, const DoubleKey& k, std::int64_t c) {
    if (c == 0) return;
    auto [it, ins] = acc.emplace(k, c);
    if (!ins) {
        it->second += c;
        if (it->second == 0) acc.erase(it);
    }
}

DoubleAlgebra::DoubleAlgebra(int n, int d, int e, bool dual_koszul) : X_(n, e), inv_(X_), d_(d), dual_koszul_(dual_koszul) {
    if (d < 0) throw PreconditionError("d must be non-negative");
}

std::vector<DoubleKey> DoubleAlgebra::basis() {
    std::vector<DoubleKey> out;
    for (int f = 0; f <= d_; ++f) {
        const auto as = inv_.basis(f);
        const auto bs = inv_.basis(d_ - f);
        for (const auto& a : as)
            for (const auto& b : bs) out.push_back({a, b});
    }
    return out;
}

int DoubleAlgebra::degree(const DoubleKey& k) const {
    return inv_.degree(k.inv) + 2 * static_cast<int>(k.dual.size()) - inv_.degree(k.dual);
}

LaurentPoly DoubleAlgebra::graded_rank() {
    LaurentPoly p;
    for (const auto& k : basis()) p.add_term(degree(k), 1);
    return p;
}

DoubleElement DoubleAlgebra::one() {
    DoubleElement r;
    auto units = X_.unit_terms();
    Tuple cur;
    std::function<void(std::size_t)> rec = [&](std::size_t lo) {
        if (static_cast<int>(cur.size()) == d_) {
            add_to(r, {cur, {}}, 1);
            return;
        }
        for (std::size_t k = lo; k < units.size(); ++k) {
            cur.push_back(units[k]);
            rec(k);
            cur.pop_back();
        }
    };
    rec(0);
    return r;
}

Sparse DoubleAlgebra::dual_mul(const Tuple& p, const Tuple& r) const {
    Tuple cat = p;
    cat.insert(cat.end(), r.begin(), r.end());
    Tuple s = cat;
    std::sort(s.begin(), s.end());
    Sparse out;
    if (!InvariantAlgebra::canonical(X_, s)) return out;
    auto orb = inv_.orbit(s);
    std::int64_t c = orb.at(cat);
    if (dual_koszul_ && inv_.parity(p) && inv_.parity(r)) c = -c;
    out[s] = c;
    return out;
}

Sparse DoubleAlgebra::act_left(const Tuple& b, const Tuple& e) {
    Sparse out;
    for (const auto& g : inv_.basis(static_cast<int>(b.size()))) {
        const auto& prod = inv_.mul(e, g);
        auto it = prod.find(b);
        if (it != prod.end()) bump(out, g, it->second);
    }
    return out;
}

Sparse DoubleAlgebra::act_right(const Tuple& f, const Tuple& b) {
    Sparse out;
    for (const auto& g : inv_.basis(static_cast<int>(b.size()))) {
        const auto& prod = inv_.mul(g, f);
        auto it = prod.find(b);
        if (it != prod.end()) bump(out, g, it->second);
    }
    return out;
}

DoubleElement DoubleAlgebra::mul(const DoubleKey& a, const DoubleKey& b) {
    auto key = std::make_pair(a, b);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    // (ξ ⊗ x)(η ⊗ y) = Σ ± ξ(2)η(1) ⊗ (x·η(2))(ξ(1)·y)
    const Tuple& xi = a.inv;
    const Tuple& x = a.dual;
    const Tuple& eta = b.inv;
    const Tuple& y = b.dual;
    int f = static_cast<int>(xi.size()), g = static_cast<int>(eta.size());
    DoubleElement out;
    if (f + g - d_ >= 0) {
        int px = inv_.parity(x), peta = inv_.parity(eta);
        const auto dxi = inv_.coproduct(xi, d_ - g);
        const auto deta = inv_.coproduct(eta, f + g - d_);
        for (const auto& [xi1, xi2, c1] : dxi)
            for (const auto& [eta1, eta2, c2] : deta) {
                int p1 = inv_.parity(xi1), p2 = inv_.parity(xi2), q1 = inv_.parity(eta1);
                int sgn = (p1 * (p2 + peta + px) + q1 * px) % 2 ? -1 : 1;
                const Sparse left = inv_.mul(xi2, eta1);
                if (left.empty()) continue;
                Sparse xl = act_left(x, eta2);
                Sparse yr = act_right(xi1, y);
                for (const auto& [gx, cx] : xl)
                    for (const auto& [gy, cy] : yr)
                        for (const auto& [s2, cd] : dual_mul(gx, gy))
                            for (const auto& [s1, cl] : left) add_to(out, {s1, s2}, sgn * c1 * c2 * cx * cy * cd * cl);
            }
    }
    return cache_.emplace(key, out).first->second;
}

DoubleElement DoubleAlgebra::mul(const DoubleElement& a, const DoubleElement& b) {
    DoubleElement r;
    for (const auto& [ka, ca] : a)
        for (const auto& [kb, cb] : b)
            for (const auto& [k, c] : mul(ka, kb)) add_to(r, k, ca * cb * c);
    return r;
}

std::string DoubleAlgebra::to_string(const DoubleElement& x) const {
    if (x.empty()) return "0";
    std::string s;
    for (const auto& [k, c] : x) {
        if (!s.empty()) s += " + ";
        s += std::to_string(c) + "*[";
        for (std::size_t t = 0; t < k.inv.size(); ++t) s += (t ? "," : "") + X_.name(k.inv[t]);
        s += "|";
        for (std::size_t t = 0; t < k.dual.size(); ++t) s += (t ? "," : "") + X_.name(k.dual[t]);
        s += "*]";
    }
    return s;
}

}  // namespace rock
