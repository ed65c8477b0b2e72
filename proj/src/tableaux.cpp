#include "rock/tableaux.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "rock/errors.hpp"

namespace rock {

namespace {

int above_count(const Node& v, const std::vector<Node>& U) {
    int n = 0;
    for (const auto& u : U)
        if (u.row < v.row) ++n;
    return n;
}

// all k-subsets of v
void subsets(const std::vector<Node>& v, int k, std::size_t from, std::vector<Node>& cur, std::vector<std::vector<Node>>& out) {
    if (static_cast<int>(cur.size()) == k) {
        out.push_back(cur);
        return;
    }
    for (std::size_t t = from; t < v.size(); ++t) {
        if (v.size() - t < static_cast<std::size_t>(k) - cur.size()) break;
        cur.push_back(v[t]);
        subsets(v, k, t + 1, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<Node>> subsets(const std::vector<Node>& v, int k) {
    std::vector<std::vector<Node>> out;
    std::vector<Node> cur;
    if (k <= static_cast<int>(v.size())) subsets(v, k, 0, cur, out);
    return out;
}

std::vector<Node> addable_inside(const Partition& nu, const Partition& outer, int i, int e) {
    std::vector<Node> out;
    for (const auto& u : addable_nodes(nu, i, e))
        if (outer.contains(u.row, u.col)) out.push_back(u);
    return out;
}

}  // namespace

int d_U(const Partition& nu, const std::vector<Node>& U, int i, int e) {
    auto rem = removable_nodes(nu, i, e);
    std::set<Node> rem_set(rem.begin(), rem.end());
    std::set<Node> u_set;
    for (const auto& u : U) {
        Node n{u.row, u.col, 0};
        if (!rem_set.count(n)) throw PreconditionError("d_U: node is not a removable i-node");
        u_set.insert(n);
    }
    int s = 0;
    for (const auto& v : addable_nodes(nu, i, e)) s += above_count(v, U);
    for (const auto& v : rem)
        if (!u_set.count(v)) s -= above_count(v, U);
    return s;
}

std::map<Node, int> StandardTableau::labels() const {
    std::map<Node, int> m;
    for (std::size_t k = 0; k < fibers.size(); ++k)
        for (const auto& u : fibers[k]) m[u] = static_cast<int>(k) + 1;
    return m;
}

std::vector<StandardTableau> enumerate_std(const SkewShape& shape, const DividedPowerWord& word, int e) {
    std::vector<StandardTableau> out;
    for (auto [i, m] : word.terms)
        if (i < 0 || i >= e) throw PreconditionError("residue outside I");
    if (content(shape, e) != word.weight(e)) return out;
    std::vector<std::vector<Node>> fibers;
    std::function<void(std::size_t, const Partition&, int)> rec = [&](std::size_t k, const Partition& nu, int deg) {
        if (k == word.terms.size()) {
            if (nu == shape.outer) out.push_back({shape, word, fibers, deg});
            return;
        }
        auto [i, m] = word.terms[k];
        auto add = addable_inside(nu, shape.outer, i, e);
        for (auto& U : subsets(add, m)) {
            Partition next = add_nodes(nu, U);
            int dk = d_U(next, U, i, e);
            fibers.push_back(U);
            rec(k + 1, next, deg + dk);
            fibers.pop_back();
        }
    };
    rec(0, shape.inner, 0);
    return out;
}

int degree(const StandardTableau& t, int e) {
    Partition nu = t.shape.inner;
    int deg = 0;
    for (std::size_t k = 0; k < t.fibers.size(); ++k) {
        nu = add_nodes(nu, t.fibers[k]);
        deg += d_U(nu, t.fibers[k], t.word.terms[k].first, e);
    }
    return deg;
}

bool is_standard(const StandardTableau& t, int e) {
    if (t.fibers.size() != t.word.terms.size()) return false;
    auto lab = t.labels();
    auto nodes = t.shape.nodes();
    if (lab.size() != nodes.size()) return false;
    for (const auto& u : nodes)
        if (!lab.count(u)) return false;
    for (std::size_t k = 0; k < t.fibers.size(); ++k) {
        if (static_cast<int>(t.fibers[k].size()) != t.word.terms[k].second) return false;
        for (const auto& u : t.fibers[k])
            if (residue(u, e) != t.word.terms[k].first) return false;
    }
    for (const auto& u : nodes)
        for (const auto& v : nodes)
            if (u != v && node_leq(u, v) && !(lab[u] < lab[v])) return false;
    return true;
}

LaurentPoly std_degree_poly(const SkewShape& shape, const DividedPowerWord& word, int e) {
    LaurentPoly p;
    for (const auto& t : enumerate_std(shape, word, e)) p.add_term(t.degree, 1);
    return p;
}

std::vector<StandardTableau> refinements(const StandardTableau& t, int e) {
    DividedPowerWord hat = DividedPowerWord::plain(t.word.hat());
    std::vector<StandardTableau> out;
    std::vector<std::vector<Node>> fibers;
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
        if (k == t.fibers.size()) {
            StandardTableau s{t.shape, hat, fibers, 0};
            if (is_standard(s, e)) {
                s.degree = degree(s, e);
                out.push_back(s);
            }
            return;
        }
        auto block = t.fibers[k];
        std::sort(block.begin(), block.end());
        do {
            for (const auto& u : block) fibers.push_back({u});
            rec(k + 1);
            fibers.resize(fibers.size() - block.size());
        } while (std::next_permutation(block.begin(), block.end()));
    };
    rec(0);
    return out;
}

std::vector<StandardTableau> all_divided_tableaux(const SkewShape& shape, int e) {
    std::vector<StandardTableau> out;
    std::vector<std::vector<Node>> fibers;
    DividedPowerWord word;
    std::function<void(const Partition&, int)> rec = [&](const Partition& nu, int deg) {
        if (nu == shape.outer) {
            out.push_back({shape, word, fibers, deg});
            return;
        }
        for (int i = 0; i < e; ++i) {
            auto add = addable_inside(nu, shape.outer, i, e);
            for (int m = 1; m <= static_cast<int>(add.size()); ++m)
                for (auto& U : subsets(add, m)) {
                    Partition next = add_nodes(nu, U);
                    int dk = d_U(next, U, i, e);
                    fibers.push_back(U);
                    word.terms.emplace_back(i, m);
                    rec(next, deg + dk);
                    word.terms.pop_back();
                    fibers.pop_back();
                }
        }
    };
    rec(shape.inner, 0);
    return out;
}

namespace {

// partitions kappa with inner ⊆ kappa ⊆ outer
std::vector<Partition> partitions_between(const Partition& inner, const Partition& outer) {
    std::vector<Partition> out;
    std::vector<int> cur(outer.length(), 0);
    std::function<void(int)> rec = [&](int r) {
        if (r == outer.length()) {
            out.emplace_back(cur);
            return;
        }
        int hi = outer.row(r + 1);
        if (r > 0) hi = std::min(hi, cur[r - 1]);
        for (int p = inner.row(r + 1); p <= hi; ++p) {
            cur[r] = p;
            rec(r + 1);
        }
    };
    if (outer.contains(inner)) rec(0);
    return out;
}

}  // namespace

std::vector<ColoredTableau> enumerate_colored(const Multipartition& mu, const ColoredComposition& lc) {
    std::vector<ColoredTableau> out;
    if (mu.size() != lc.size()) return out;
    int n = lc.length();
    std::vector<std::vector<Node>> fibers;
    std::function<void(int, const Multipartition&)> rec = [&](int r, const Multipartition& nu) {
        if (r == n) {
            if (nu == mu) out.push_back({mu, fibers});
            return;
        }
        int c = lc.colors[r];
        int need = lc.lambda.parts[r];
        auto lows = partitions_between(nu.components[c - 1], mu.components[c - 1]);
        auto highs = c < mu.count() ? partitions_between(nu.components[c], mu.components[c]) : std::vector<Partition>{};
        for (const auto& lo : lows)
            for (const auto& hi : highs) {
                int sz = lo.size() - nu.components[c - 1].size() + hi.size() - nu.components[c].size();
                if (sz != need) continue;
                std::vector<Node> U;
                for (const auto& u : SkewShape(lo, nu.components[c - 1]).nodes()) U.push_back({u.row, u.col, c - 1});
                for (const auto& u : SkewShape(hi, nu.components[c]).nodes()) U.push_back({u.row, u.col, c});
                if (!is_bend(U, c)) continue;
                Multipartition next = nu;
                next.components[c - 1] = lo;
                next.components[c] = hi;
                fibers.push_back(U);
                rec(r + 1, next);
                fibers.pop_back();
            }
    };
    rec(0, Multipartition::empty_of(mu.count()));
    return out;
}

long long matrix_count(const ColoredComposition& lc, const std::vector<int>& b, int e) {
    int d = static_cast<int>(b.size());
    if (lc.size() != d) throw PreconditionError("|lambda| must equal the length of b");
    int n = lc.length();
    std::vector<int> left = lc.lambda.parts;
    std::function<long long(int)> rec = [&](int s) -> long long {
        if (s == d) return 1;
        long long total = 0;
        for (int r = 0; r < n; ++r) {
            if (left[r] == 0) continue;
            for (int i = 0; i < e; ++i) {
                if (!incident(i, lc.colors[r]) || !incident(i, b[s])) continue;
                --left[r];
                total += rec(s + 1);
                ++left[r];
            }
        }
        return total;
    };
    return rec(0);
}

long long index_sum(const ColoredComposition& lc, const std::vector<int>& b, int e) {
    int d = static_cast<int>(b.size());
    if (lc.size() != d) throw PreconditionError("|lambda| must equal the length of b");
    int n = lc.length();
    // rows of A: each row r splits lambda_r between c_r and c_r - 1
    std::vector<std::vector<int>> A(n, std::vector<int>(e, 0));
    // alpha_i(B): number of s with the chosen i; enumerate B column by column
    std::vector<std::vector<int>> alphas;
    std::vector<int> alpha(e, 0);
    std::function<void(int)> recB = [&](int s) {
        if (s == d) {
            alphas.push_back(alpha);
            return;
        }
        for (int i : {b[s], b[s] - 1}) {
            ++alpha[i];
            recB(s + 1);
            --alpha[i];
        }
    };
    recB(0);
    long long total = 0;
    std::function<void(int)> recA = [&](int r) {
        if (r == n) {
            std::vector<int> beta(e, 0);
            for (int x = 0; x < n; ++x)
                for (int i = 0; i < e; ++i) beta[i] += A[x][i];
            long long weight = 1;
            for (int i = 0; i < e; ++i) {
                long long w = factorial(beta[i]);
                for (int x = 0; x < n; ++x) w /= factorial(A[x][i]);
                weight *= w;
            }
            for (const auto& a : alphas)
                if (a == beta) total += weight;
            return;
        }
        int c = lc.colors[r];
        for (int k = 0; k <= lc.lambda.parts[r]; ++k) {
            A[r][c] = k;
            A[r][c - 1] = lc.lambda.parts[r] - k;
            recA(r + 1);
        }
        A[r][c] = A[r][c - 1] = 0;
    };
    recA(0);
    return total;
}

}  // namespace rock
