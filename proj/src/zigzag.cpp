#include "rock/zigzag.hpp"

#include <functional>

#include "rock/errors.hpp"

namespace rock {

std::string ZigzagBasisElem::name() const {
    switch (kind) {
        case Kind::Vertex:
            return "e" + std::to_string(left);
        case Kind::Loop:
            return "ce" + std::to_string(left);
        case Kind::Arrow:
            return "a" + std::to_string(left) + "," + std::to_string(right);
    }
    return "?";
}

Zigzag::Zigzag(int e) : e_(e) {
    if (e < 2) throw PreconditionError("e must be at least 2");
    using K = ZigzagBasisElem::Kind;
    for (int j = 1; j < e; ++j) basis_.push_back({K::Vertex, j, j, 0});
    for (int k = 1; k < e; ++k)
        for (int j : {k - 1, k + 1})
            if (j >= 1 && j < e) basis_.push_back({K::Arrow, k, j, 1});
    for (int j = 1; j < e; ++j) basis_.push_back({K::Loop, j, j, 2});

    int n = dim();
    table_.assign(n * n, -1);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            const auto& a = basis_[x];
            const auto& b = basis_[y];
            if (a.right != b.left) continue;
            int r = -1;
            if (a.kind == K::Vertex)
                r = y;
            else if (b.kind == K::Vertex)
                r = x;
            else if (a.kind == K::Arrow && b.kind == K::Arrow && a.left == b.right)
                r = loop(a.left);
            table_[x * n + y] = r;
        }
}

int Zigzag::vertex(int j) const {
    if (j < 1 || j >= e_) throw PreconditionError("vertex outside J");
    return j - 1;
}

int Zigzag::loop(int j) const {
    if (j < 1 || j >= e_) throw PreconditionError("vertex outside J");
    return dim() - (e_ - 1) + (j - 1);
}

int Zigzag::arrow(int k, int j) const {
    for (int x = 0; x < dim(); ++x)
        if (basis_[x].kind == ZigzagBasisElem::Kind::Arrow && basis_[x].left == k && basis_[x].right == j) return x;
    return -1;
}

std::vector<int> Zigzag::left_truncated(int j) const {
    std::vector<int> out;
    for (int x = 0; x < dim(); ++x)
        if (basis_[x].left == j) out.push_back(x);
    return out;
}

LaurentPoly Zigzag::graded_dim() const {
    LaurentPoly p;
    for (const auto& b : basis_) p.add_term(b.degree, 1);
    return p;
}

LaurentPoly graded_dim_Z(int e) { return Zigzag(e).graded_dim(); }

int dim_ejZ(int j, int e) { return static_cast<int>(Zigzag(e).left_truncated(j).size()); }

void add_to(WreathElement& acc, const WreathKey& k, std::int64_t c) {
    if (c == 0) return;
    auto [it, inserted] = acc.emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) acc.erase(it);
    }
}

Wreath::Wreath(int e, int d) : Z_(e), d_(d) {
    if (d < 0) throw PreconditionError("d must be non-negative");
}

std::optional<WreathKey> Wreath::mul_keys(const WreathKey& a, const WreathKey& b) const {
    WreathKey r;
    r.z.resize(d_);
    for (int t = 0; t < d_; ++t) {
        // y^{g^{-1}} at t is y at g^{-1}(t)
        int src = -1;
        for (int u = 0; u < d_; ++u)
            if (a.g.at0(u) == t) src = u;
        int p = Z_.mul(a.z[t], b.z[src]);
        if (p < 0) return std::nullopt;
        r.z[t] = static_cast<std::uint8_t>(p);
    }
    r.g = a.g * b.g;
    return r;
}

WreathElement Wreath::mul(const WreathElement& a, const WreathElement& b) const {
    WreathElement r;
    for (const auto& [ka, ca] : a)
        for (const auto& [kb, cb] : b)
            if (auto k = mul_keys(ka, kb)) add_to(r, *k, ca * cb);
    return r;
}

WreathElement Wreath::one() const {
    WreathElement r;
    std::vector<int> ids(d_);
    // 1_Z = Σ_j e_j
    std::function<void(int, WreathKey&)> rec = [&](int t, WreathKey& k) {
        if (t == d_) {
            add_to(r, k, 1);
            return;
        }
        for (int j = 1; j < e(); ++j) {
            k.z[t] = static_cast<std::uint8_t>(Z_.vertex(j));
            rec(t + 1, k);
        }
    };
    WreathKey k{std::vector<std::uint8_t>(d_), Permutation(d_)};
    rec(0, k);
    return r;
}

WreathElement Wreath::tensor(const std::vector<int>& z) const {
    if (static_cast<int>(z.size()) != d_) throw PreconditionError("tensor length differs from d");
    WreathKey k{std::vector<std::uint8_t>(z.begin(), z.end()), Permutation(d_)};
    return {{k, 1}};
}

WreathElement Wreath::perm(const Permutation& g) const {
    WreathElement u = one();
    WreathElement r;
    for (const auto& [k, c] : u) add_to(r, WreathKey{k.z, g}, c);
    return r;
}

WreathElement Wreath::at(int zb, int a) const {
    // x[a] = 1 ⊗ ... ⊗ x ⊗ ... ⊗ 1
    WreathElement r;
    for (const auto& [k, c] : one()) {
        if (static_cast<int>(k.z[a - 1]) != Z_.vertex(Z_.elem(zb).left)) continue;
        WreathKey k2 = k;
        k2.z[a - 1] = static_cast<std::uint8_t>(zb);
        add_to(r, k2, c);
    }
    return r;
}

int Wreath::degree(const WreathKey& k) const {
    int s = 0;
    for (auto x : k.z) s += Z_.elem(x).degree;
    return s;
}

std::vector<WreathKey> Wreath::basis() const {
    std::vector<WreathKey> out;
    auto perms = all_permutations(d_);
    std::vector<std::uint8_t> z(d_);
    std::function<void(int)> rec = [&](int t) {
        if (t == d_) {
            for (const auto& g : perms) out.push_back({z, g});
            return;
        }
        for (int x = 0; x < Z_.dim(); ++x) {
            z[t] = static_cast<std::uint8_t>(x);
            rec(t + 1);
        }
    };
    rec(0);
    return out;
}

long long Wreath::basis_count() const { return static_cast<long long>(basis().size()); }

int epsilon(const ColoredComposition& lc, const Permutation& g) {
    if (!in_parabolic(g, lc.lambda)) throw PreconditionError("permutation is not in the parabolic subgroup");
    int s = 1;
    for (int r = 0; r < lc.length(); ++r)
        if (lc.colors[r] % 2 == 0 && block_length(g, lc.lambda, r) % 2 == 1) s = -s;
    return s;
}

ColoredModule::ColoredModule(const ColoredComposition& lc, int e) : lc_(lc), W_(e, lc.size()) {
    for (int r = 0; r < lc.length(); ++r)
        for (int k = 0; k < lc.lambda.parts[r]; ++k) pos_color_.push_back(lc.colors[r]);
    int d = lc.size();
    auto reps = min_coset_reps_left(lc.lambda);
    std::vector<std::uint8_t> z(d);
    std::function<void(int)> rec = [&](int t) {
        if (t == d) {
            for (const auto& g : reps) basis_.push_back({z, g});
            return;
        }
        for (int x : W_.Z().left_truncated(pos_color_[t])) {
            z[t] = static_cast<std::uint8_t>(x);
            rec(t + 1);
        }
    };
    rec(0);
    for (std::size_t b = 0; b < basis_.size(); ++b) index_[basis_[b]] = static_cast<int>(b);
}

int ColoredModule::index_of(const WreathKey& k) const {
    auto it = index_.find(k);
    return it == index_.end() ? -1 : it->second;
}

ColoredModule::Signed ColoredModule::act(int b, const WreathKey& w) const {
    auto prod = W_.mul_keys(basis_[b], w);
    if (!prod) return {-1, 0};
    auto [h, g2] = factor_left(prod->g, lc_.lambda);
    WreathKey k;
    k.g = g2;
    k.z.resize(prod->z.size());
    for (std::size_t t = 0; t < k.z.size(); ++t) k.z[t] = prod->z[h.at0(static_cast<int>(t))];
    int idx = index_of(k);
    if (idx < 0) throw InvariantError("module rewrite left the basis");
    return {idx, epsilon(lc_, h)};
}

std::vector<std::int64_t> ColoredModule::act(const std::vector<std::int64_t>& v, const WreathElement& w) const {
    std::vector<std::int64_t> r(basis_.size(), 0);
    for (std::size_t b = 0; b < v.size(); ++b) {
        if (v[b] == 0) continue;
        for (const auto& [k, c] : w) {
            auto s = act(static_cast<int>(b), k);
            if (s.index >= 0) r[s.index] += v[b] * c * s.sign;
        }
    }
    return r;
}

int ColoredModule::generator() const { return index_of(idempotent_times(Permutation(lc_.size()))); }

WreathKey ColoredModule::idempotent_times(const Permutation& g) const {
    WreathKey k;
    k.g = g;
    for (int c : pos_color_) k.z.push_back(static_cast<std::uint8_t>(W_.Z().vertex(c)));
    return k;
}

}  // namespace rock
