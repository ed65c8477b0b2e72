#include "rock/combinatorics.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "rock/errors.hpp"

namespace rock {

namespace {

std::vector<int> parse_ints(const std::string& text) {
    std::string t = text;
    if (t == "∅" || t == "()" || t == "-") return {};
    for (char& ch : t)
        if (ch == ',' || ch == '(' || ch == ')' || ch == ';') ch = ' ';
    std::istringstream is(t);
    std::vector<int> out;
    std::string tok;
    while (is >> tok) {
        std::size_t pos = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &pos);
        } catch (const std::exception&) {
            throw PreconditionError("not an integer: '" + tok + "'");
        }
        if (pos != tok.size()) throw PreconditionError("not an integer: '" + tok + "'");
        out.push_back(v);
    }
    return out;
}

std::string join(const std::vector<int>& v) {
    std::ostringstream os;
    os << "(";
    for (std::size_t k = 0; k < v.size(); ++k) os << (k ? "," : "") << v[k];
    os << ")";
    return os.str();
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t k = 0; k < parts_.size(); ++k) {
        if (parts_[k] < 0) throw PreconditionError("negative part in partition");
        if (k > 0 && parts_[k] > parts_[k - 1]) throw PreconditionError("parts not weakly decreasing: " + join(parts_));
    }
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

Partition Partition::parse(const std::string& text) { return Partition(parse_ints(text)); }

int Partition::size() const {
    int s = 0;
    for (int p : parts_) s += p;
    return s;
}

bool Partition::contains(const Partition& other) const {
    if (other.length() > length()) return false;
    for (int r = 1; r <= other.length(); ++r)
        if (other.row(r) > row(r)) return false;
    return true;
}

Partition Partition::conjugate() const {
    std::vector<int> c;
    for (int s = 1; s <= row(1); ++s) {
        int n = 0;
        while (row(n + 1) >= s) ++n;
        c.push_back(n);
    }
    return Partition(c);
}

std::string Partition::to_string() const { return parts_.empty() ? "∅" : join(parts_); }

int Composition::size() const {
    int s = 0;
    for (int p : parts) s += p;
    return s;
}

Composition Composition::parse(const std::string& text) {
    Composition c{parse_ints(text)};
    for (int p : c.parts)
        if (p < 0) throw PreconditionError("negative composition part");
    return c;
}

std::string Composition::to_string() const { return join(parts); }

ColoredComposition::ColoredComposition(Composition l, std::vector<int> c, int e) : lambda(std::move(l)), colors(std::move(c)) {
    if (lambda.parts.size() != colors.size()) throw PreconditionError("composition and colors have different lengths");
    for (int x : colors)
        if (x < 1 || x > e - 1) throw PreconditionError("color outside J = {1,...,e-1}");
    for (int p : lambda.parts)
        if (p < 0) throw PreconditionError("negative composition part");
}

int Multipartition::size() const {
    int s = 0;
    for (const auto& p : components) s += p.size();
    return s;
}

std::string Multipartition::to_string() const {
    std::string s = "(";
    for (std::size_t k = 0; k < components.size(); ++k) s += (k ? "|" : "") + components[k].to_string();
    return s + ")";
}

bool node_leq(const Node& a, const Node& b) { return a.comp == b.comp && a.row <= b.row && a.col <= b.col; }

bool nodes_independent(const Node& a, const Node& b) { return !node_leq(a, b) && !node_leq(b, a); }

SkewShape::SkewShape(Partition o, Partition i) : outer(std::move(o)), inner(std::move(i)) {
    if (!outer.contains(inner)) throw PreconditionError("inner partition not contained in outer");
}

std::vector<Node> SkewShape::nodes() const {
    std::vector<Node> out;
    for (int r = 1; r <= outer.length(); ++r)
        for (int s = inner.row(r) + 1; s <= outer.row(r); ++s) out.push_back({r, s, 0});
    return out;
}

int residue(int r, int s, int e) { return (((s - r) % e) + e) % e; }

std::vector<int> content(const SkewShape& shape, int e) {
    std::vector<int> c(e, 0);
    for (const auto& u : shape.nodes()) ++c[residue(u, e)];
    return c;
}

std::vector<Node> addable_nodes(const Partition& p, int i, int e) {
    std::vector<Node> out;
    for (int r = 1; r <= p.length() + 1; ++r) {
        int s = p.row(r) + 1;
        if (r == 1 || p.row(r - 1) >= s)
            if (i < 0 || residue(r, s, e) == i) out.push_back({r, s, 0});
    }
    return out;
}

std::vector<Node> removable_nodes(const Partition& p, int i, int e) {
    std::vector<Node> out;
    for (int r = 1; r <= p.length(); ++r) {
        int s = p.row(r);
        if (p.row(r + 1) < s)
            if (i < 0 || residue(r, s, e) == i) out.push_back({r, s, 0});
    }
    return out;
}

Partition add_nodes(const Partition& p, const std::vector<Node>& nodes) {
    std::vector<int> parts = p.parts();
    for (const auto& u : nodes) {
        if (static_cast<int>(parts.size()) < u.row) parts.resize(u.row, 0);
        parts[u.row - 1] += 1;
    }
    return Partition(parts);
}

Partition remove_nodes(const Partition& p, const std::vector<Node>& nodes) {
    std::vector<int> parts = p.parts();
    for (const auto& u : nodes) {
        if (u.row > static_cast<int>(parts.size()) || parts[u.row - 1] <= 0) throw PreconditionError("removing absent node");
        parts[u.row - 1] -= 1;
    }
    return Partition(parts);
}

bool is_convex(const std::vector<Node>& nodes) {
    std::set<Node> s(nodes.begin(), nodes.end());
    for (const auto& u : nodes)
        for (const auto& v : nodes) {
            if (!node_leq(u, v)) continue;
            for (int r = u.row; r <= v.row; ++r)
                for (int c = u.col; c <= v.col; ++c)
                    if (!s.count({r, c, u.comp})) return false;
        }
    return true;
}

bool is_horizontal_strip(const std::vector<Node>& nodes) {
    std::set<int> cols;
    for (const auto& u : nodes)
        if (!cols.insert(u.col).second) return false;
    return is_convex(nodes);
}

bool is_vertical_strip(const std::vector<Node>& nodes) {
    std::set<int> rows;
    for (const auto& u : nodes)
        if (!rows.insert(u.row).second) return false;
    return is_convex(nodes);
}

bool is_bend(const std::vector<Node>& nodes, int j) {
    std::vector<Node> lower, upper;
    for (const auto& u : nodes) {
        if (u.comp == j - 1)
            lower.push_back(u);
        else if (u.comp == j)
            upper.push_back(u);
        else
            return false;
    }
    return is_horizontal_strip(lower) && is_vertical_strip(upper);
}

std::vector<Partition> partitions_of(int d) {
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int left, int maxp) {
        if (left == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(left, maxp); p >= 1; --p) {
            cur.push_back(p);
            rec(left - p, p);
            cur.pop_back();
        }
    };
    rec(d, d);
    return out;
}

std::vector<Partition> partitions_up_to(int d) {
    std::vector<Partition> out;
    for (int k = 0; k <= d; ++k) {
        auto v = partitions_of(k);
        out.insert(out.end(), v.begin(), v.end());
    }
    return out;
}

std::vector<Composition> compositions(int n, int d) {
    std::vector<Composition> out;
    if (n == 0) {
        if (d == 0) out.push_back({});
        return out;
    }
    std::vector<int> cur(n, 0);
    std::function<void(int, int)> rec = [&](int k, int left) {
        if (k == n - 1) {
            cur[k] = left;
            out.push_back({cur});
            return;
        }
        for (int p = left; p >= 0; --p) {
            cur[k] = p;
            rec(k + 1, left - p);
        }
    };
    rec(0, d);
    return out;
}

std::vector<Multipartition> multipartitions(int k, int d) {
    std::vector<Multipartition> out;
    for (const auto& sizes : compositions(k, d)) {
        std::vector<Partition> cur(k);
        std::function<void(int)> rec = [&](int t) {
            if (t == k) {
                out.emplace_back(cur);
                return;
            }
            for (const auto& p : partitions_of(sizes.parts[t])) {
                cur[t] = p;
                rec(t + 1);
            }
        };
        rec(0);
    }
    return out;
}

std::vector<std::vector<int>> color_tuples(int d, int e) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(d, 1);
    std::function<void(int)> rec = [&](int t) {
        if (t == d) {
            out.push_back(cur);
            return;
        }
        for (int j = 1; j <= e - 1; ++j) {
            cur[t] = j;
            rec(t + 1);
        }
    };
    rec(0);
    return out;
}

std::vector<ColoredComposition> colored_compositions(int n, int d, int e) {
    std::vector<ColoredComposition> out;
    for (const auto& l : compositions(n, d))
        for (const auto& c : color_tuples(n, e)) out.emplace_back(l, c, e);
    return out;
}

long long factorial(int n) {
    long long f = 1;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

long long binomial(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (long long t = 1; t <= k; ++t) r = r * (n - k + t) / t;
    return r;
}

long long multinomial_index(const Composition& lambda) {
    long long r = factorial(lambda.size());
    for (int p : lambda.parts) r /= factorial(p);
    return r;
}

}  // namespace rock
