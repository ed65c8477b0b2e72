#pragma once

#include <compare>
#include <set>
#include <string>
#include <vector>

namespace rock {

class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    // "3,1", "3 1", "", "0" or "∅"
    static Partition parse(const std::string& text);

    const std::vector<int>& parts() const { return parts_; }
    int size() const;
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    // 1-based row index; 0 past the end
    int row(int r) const { return r >= 1 && r <= length() ? parts_[r - 1] : 0; }
    bool contains(int r, int s) const { return r >= 1 && s >= 1 && s <= row(r); }
    bool contains(const Partition& other) const;
    Partition conjugate() const;
    std::string to_string() const;

    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

struct Composition {
    std::vector<int> parts;

    int size() const;
    int length() const { return static_cast<int>(parts.size()); }
    static Composition parse(const std::string& text);
    std::string to_string() const;
    friend auto operator<=>(const Composition&, const Composition&) = default;
};

// (lambda, c) with colors in J = {1, ..., e-1}
struct ColoredComposition {
    Composition lambda;
    std::vector<int> colors;

    ColoredComposition() = default;
    ColoredComposition(Composition l, std::vector<int> c, int e);
    int size() const { return lambda.size(); }
    int length() const { return lambda.length(); }
    friend auto operator<=>(const ColoredComposition&, const ColoredComposition&) = default;
};

struct Multipartition {
    std::vector<Partition> components;

    Multipartition() = default;
    explicit Multipartition(std::vector<Partition> c) : components(std::move(c)) {}
    static Multipartition empty_of(int k) { return Multipartition(std::vector<Partition>(k)); }
    int size() const;
    int count() const { return static_cast<int>(components.size()); }
    std::string to_string() const;
    friend auto operator<=>(const Multipartition&, const Multipartition&) = default;
};

struct Node {
    int row = 1;
    int col = 1;
    int comp = 0;

    friend auto operator<=>(const Node&, const Node&) = default;
};

// (r,s,i) <= (r',s',i') iff i = i', r <= r', s <= s'
bool node_leq(const Node& a, const Node& b);
// two nodes are independent when neither is below the other
bool nodes_independent(const Node& a, const Node& b);

struct SkewShape {
    Partition outer;
    Partition inner;

    SkewShape() = default;
    SkewShape(Partition o, Partition i = {});
    std::vector<Node> nodes() const;
    int size() const { return outer.size() - inner.size(); }
};

int residue(int r, int s, int e);
inline int residue(const Node& u, int e) { return residue(u.row, u.col, e); }
std::vector<int> content(const SkewShape& shape, int e);
inline std::vector<int> content(const Partition& p, int e) { return content(SkewShape(p), e); }

// Addable / removable nodes of residue i (i < 0 means any residue), top to bottom.
std::vector<Node> addable_nodes(const Partition& p, int i, int e);
std::vector<Node> removable_nodes(const Partition& p, int i, int e);
Partition add_nodes(const Partition& p, const std::vector<Node>& nodes);
Partition remove_nodes(const Partition& p, const std::vector<Node>& nodes);

bool is_convex(const std::vector<Node>& nodes);
bool is_horizontal_strip(const std::vector<Node>& nodes);
bool is_vertical_strip(const std::vector<Node>& nodes);
// U ⊂ N^{I,j-1} ∪ N^{I,j}, horizontal strip on j-1, vertical strip on j
bool is_bend(const std::vector<Node>& nodes, int j);

// Orders: partitions in reverse lexicographic order ((4), (3,1), (2,2), ...);
// compositions likewise ((2,0), (1,1), (0,2)); multipartitions by the
// composition of component sizes, then componentwise.
std::vector<Partition> partitions_of(int d);
std::vector<Partition> partitions_up_to(int d);
std::vector<Composition> compositions(int n, int d);
std::vector<Multipartition> multipartitions(int k, int d);
std::vector<ColoredComposition> colored_compositions(int n, int d, int e);
// all b in J^d, lexicographic
std::vector<std::vector<int>> color_tuples(int d, int e);

long long factorial(int n);
long long binomial(long long n, long long k);
long long multinomial_index(const Composition& lambda);  // |S_d : S_lambda|

}  // namespace rock
