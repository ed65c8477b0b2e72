#include "rock/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "rock/errors.hpp"

namespace rock {

Permutation::Permutation(int d) : img_(d) { std::iota(img_.begin(), img_.end(), 0); }

Permutation Permutation::from_images(const std::vector<int>& one_based) {
    Permutation p;
    std::vector<bool> seen(one_based.size(), false);
    for (int x : one_based) {
        if (x < 1 || x > static_cast<int>(one_based.size()) || seen[x - 1]) throw PreconditionError("not a permutation");
        seen[x - 1] = true;
        p.img_.push_back(x - 1);
    }
    return p;
}

Permutation Permutation::simple(int d, int r) {
    if (r < 1 || r >= d) throw PreconditionError("simple transposition index out of range");
    Permutation p(d);
    std::swap(p.img_[r - 1], p.img_[r]);
    return p;
}

Permutation Permutation::inverse() const {
    Permutation p;
    p.img_.resize(img_.size());
    for (std::size_t t = 0; t < img_.size(); ++t) p.img_[img_[t]] = static_cast<int>(t);
    return p;
}

int Permutation::length() const {
    int n = 0;
    for (std::size_t a = 0; a < img_.size(); ++a)
        for (std::size_t b = a + 1; b < img_.size(); ++b)
            if (img_[a] > img_[b]) ++n;
    return n;
}

bool Permutation::is_identity() const {
    for (std::size_t t = 0; t < img_.size(); ++t)
        if (img_[t] != static_cast<int>(t)) return false;
    return true;
}

std::vector<int> Permutation::images() const {
    std::vector<int> v;
    for (int x : img_) v.push_back(x + 1);
    return v;
}

std::string Permutation::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t t = 0; t < img_.size(); ++t) os << (t ? " " : "") << img_[t] + 1;
    os << "]";
    return os.str();
}

Permutation operator*(const Permutation& g, const Permutation& h) {
    if (g.degree() != h.degree()) throw PreconditionError("permutation degrees differ");
    Permutation p;
    p.img_.resize(h.img_.size());
    for (std::size_t t = 0; t < h.img_.size(); ++t) p.img_[t] = g.img_[h.img_[t]];
    return p;
}

std::vector<Permutation> all_permutations(int d) {
    std::vector<int> v(d);
    std::iota(v.begin(), v.end(), 1);
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation::from_images(v));
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

std::vector<std::pair<int, int>> composition_blocks(const Composition& lambda) {
    std::vector<std::pair<int, int>> out;
    int start = 0;
    for (int p : lambda.parts) {
        out.emplace_back(start, start + p);
        start += p;
    }
    return out;
}

bool in_parabolic(const Permutation& g, const Composition& lambda) {
    for (auto [a, b] : composition_blocks(lambda))
        for (int t = a; t < b; ++t)
            if (g.at0(t) < a || g.at0(t) >= b) return false;
    return true;
}

std::vector<Permutation> parabolic_elements(const Composition& lambda) {
    std::vector<Permutation> out;
    for (const auto& g : all_permutations(lambda.size()))
        if (in_parabolic(g, lambda)) out.push_back(g);
    return out;
}

int block_length(const Permutation& g, const Composition& lambda, int r) {
    auto [a, b] = composition_blocks(lambda).at(r);
    int n = 0;
    for (int x = a; x < b; ++x)
        for (int y = x + 1; y < b; ++y)
            if (g.at0(x) > g.at0(y)) ++n;
    return n;
}

bool is_min_left_rep(const Permutation& g, const Composition& lambda) {
    // no left descent s_t with t, t+1 in the same block: g^{-1} increasing on blocks
    Permutation gi = g.inverse();
    for (auto [a, b] : composition_blocks(lambda))
        for (int t = a; t + 1 < b; ++t)
            if (gi.at0(t) > gi.at0(t + 1)) return false;
    return true;
}

std::vector<Permutation> min_coset_reps_left(const Composition& lambda) {
    std::vector<Permutation> out;
    for (const auto& g : all_permutations(lambda.size()))
        if (is_min_left_rep(g, lambda)) out.push_back(g);
    return out;
}

std::vector<Permutation> min_coset_reps_right(const Composition& lambda) {
    std::vector<Permutation> out;
    for (const auto& g : min_coset_reps_left(lambda)) out.push_back(g.inverse());
    std::sort(out.begin(), out.end());
    return out;
}

std::pair<Permutation, Permutation> factor_left(const Permutation& w, const Composition& lambda) {
    int d = w.degree();
    if (lambda.size() != d) throw PreconditionError("composition size differs from permutation degree");
    Permutation wi = w.inverse();
    std::vector<int> h_img(d);
    for (auto [a, b] : composition_blocks(lambda)) {
        std::vector<int> elems;
        for (int x = a; x < b; ++x) elems.push_back(x);
        std::sort(elems.begin(), elems.end(), [&](int x, int y) { return wi.at0(x) < wi.at0(y); });
        for (int t = a; t < b; ++t) h_img[t] = elems[t - a] + 1;
    }
    Permutation h = Permutation::from_images(h_img);
    Permutation g = h.inverse() * w;
    return {h, g};
}

}  // namespace rock
