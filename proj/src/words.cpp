#include "rock/words.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "rock/errors.hpp"

namespace rock {

std::vector<int> word_weight(const Word& w, int e) {
    std::vector<int> c(e, 0);
    for (int x : w) ++c.at(x);
    return c;
}

std::string word_to_string(const Word& w) {
    std::ostringstream os;
    for (std::size_t k = 0; k < w.size(); ++k) os << (k ? "," : "") << w[k];
    return os.str();
}

Word parse_word(const std::string& text) {
    Word w;
    bool has_sep = text.find_first_of(", ") != std::string::npos;
    if (!has_sep) {
        for (char ch : text) {
            if (ch < '0' || ch > '9') throw PreconditionError("bad word '" + text + "'");
            w.push_back(ch - '0');
        }
        return w;
    }
    return Composition::parse(text).parts;
}

DividedPowerWord DividedPowerWord::plain(const Word& w) {
    DividedPowerWord d;
    for (int x : w) d.terms.emplace_back(x, 1);
    return d;
}

DividedPowerWord DividedPowerWord::parse(const std::string& text) {
    DividedPowerWord d;
    std::string t = text;
    for (char& ch : t)
        if (ch == ',') ch = ' ';
    std::istringstream is(t);
    std::string tok;
    while (is >> tok) {
        int i = 0, m = 1;
        auto caret = tok.find('^');
        auto paren = tok.find('(');
        try {
            if (caret != std::string::npos) {
                i = std::stoi(tok.substr(0, caret));
                m = std::stoi(tok.substr(caret + 1));
            } else if (paren != std::string::npos) {
                i = std::stoi(tok.substr(0, paren));
                m = std::stoi(tok.substr(paren + 1));
            } else {
                i = std::stoi(tok);
            }
        } catch (const std::exception&) {
            throw PreconditionError("bad divided power word '" + text + "'");
        }
        if (i < 0 || m < 0) throw PreconditionError("bad divided power word '" + text + "'");
        d.terms.emplace_back(i, m);
    }
    return d;
}

Word DividedPowerWord::hat() const {
    Word w;
    for (auto [i, m] : terms)
        for (int k = 0; k < m; ++k) w.push_back(i);
    return w;
}

int DividedPowerWord::length() const {
    int n = 0;
    for (auto [i, m] : terms) n += m;
    return n;
}

int DividedPowerWord::angle() const {
    int n = 0;
    for (auto [i, m] : terms) n += m * (m - 1) / 2;
    return n;
}

std::vector<int> DividedPowerWord::weight(int e) const {
    std::vector<int> c(e, 0);
    for (auto [i, m] : terms) {
        if (i < 0 || i >= e) throw PreconditionError("residue outside I");
        c[i] += m;
    }
    return c;
}

DividedPowerWord DividedPowerWord::shifted(int kappa, int e) const {
    DividedPowerWord d;
    for (auto [i, m] : terms) d.terms.emplace_back(((i + kappa) % e + e) % e, m);
    return d;
}

DividedPowerWord DividedPowerWord::concat(const DividedPowerWord& other) const {
    DividedPowerWord d = *this;
    d.terms.insert(d.terms.end(), other.terms.begin(), other.terms.end());
    return d;
}

LaurentPoly DividedPowerWord::factorial() const {
    LaurentPoly p(1);
    for (auto [i, m] : terms) p *= LaurentPoly::q_fact(m);
    return p;
}

std::string DividedPowerWord::to_string() const {
    std::ostringstream os;
    for (std::size_t k = 0; k < terms.size(); ++k) {
        os << (k ? "," : "") << terms[k].first;
        if (terms[k].second != 1) os << "^" << terms[k].second;
    }
    return os.str();
}

namespace {

void shuffles_into(const Word& a, const Word& b, std::size_t i, std::size_t j, Word& cur, std::set<Word>& out) {
    if (i == a.size() && j == b.size()) {
        out.insert(cur);
        return;
    }
    if (i < a.size()) {
        cur.push_back(a[i]);
        shuffles_into(a, b, i + 1, j, cur, out);
        cur.pop_back();
    }
    if (j < b.size()) {
        cur.push_back(b[j]);
        shuffles_into(a, b, i, j + 1, cur, out);
        cur.pop_back();
    }
}

std::set<Word> shuffles(const Word& a, const Word& b) {
    std::set<Word> out;
    Word cur;
    shuffles_into(a, b, 0, 0, cur, out);
    return out;
}

}  // namespace

std::vector<Word> delta_words(int e, int j) {
    if (j < 1 || j > e - 1) throw PreconditionError("j outside J");
    Word up, down;
    for (int k = 1; k <= j - 1; ++k) up.push_back(k);
    for (int k = e - 1; k >= j + 1; --k) down.push_back(k);
    std::vector<Word> out;
    for (const auto& k : shuffles(up, down)) {
        Word w{0};
        w.insert(w.end(), k.begin(), k.end());
        w.push_back(j);
        out.push_back(w);
    }
    std::sort(out.begin(), out.end());
    return out;
}

Word canonical_lj(int e, int j) {
    if (j < 1 || j > e - 1) throw PreconditionError("j outside J");
    Word w{0};
    for (int k = 1; k <= j - 1; ++k) w.push_back(k);
    for (int k = e - 1; k >= j + 1; --k) w.push_back(k);
    w.push_back(j);
    return w;
}

Word reversed_lj(int e, int j) {
    if (j < 1 || j > e - 1) throw PreconditionError("j outside J");
    Word w{0};
    for (int k = e - 1; k >= j + 1; --k) w.push_back(k);
    for (int k = 1; k <= j - 1; ++k) w.push_back(k);
    w.push_back(j);
    return w;
}

LjChoice LjChoice::canonical(int e) {
    LjChoice c;
    c.e = e;
    for (int j = 1; j < e; ++j) c.words.push_back(canonical_lj(e, j));
    return c;
}

LjChoice LjChoice::reversed(int e) {
    LjChoice c;
    c.e = e;
    for (int j = 1; j < e; ++j) c.words.push_back(reversed_lj(e, j));
    return c;
}

DividedPowerWord inflate(const Word& lj, int m) {
    DividedPowerWord d;
    if (m == 0) return d;
    for (int x : lj) d.terms.emplace_back(x, m);
    return d;
}

DividedPowerWord gg_word(const ColoredComposition& lc, const LjChoice& lj) {
    DividedPowerWord d;
    for (int t = 0; t < lc.length(); ++t) d = d.concat(inflate(lj(lc.colors[t]), lc.lambda.parts[t]));
    return d;
}

DividedPowerWord gg_word(const ColoredComposition& lc, int e) { return gg_word(lc, LjChoice::canonical(e)); }

int a_lambda(const ColoredComposition& lc, int e) {
    int s = 0;
    for (int p : lc.lambda.parts) s += p * (p - 1) / 2;
    return -e * s;
}

std::vector<std::vector<int>> finite_positive_roots(int e) {
    std::vector<std::vector<int>> out;
    for (int a = 1; a <= e - 1; ++a)
        for (int b = a; b <= e - 1; ++b) {
            std::vector<int> r(e, 0);
            for (int k = a; k <= b; ++k) r[k] = 1;
            out.push_back(r);
        }
    return out;
}

namespace {

bool in_monoid(const std::vector<int>& w, const std::vector<std::vector<int>>& gens, std::map<std::vector<int>, bool>& memo) {
    bool zero = std::all_of(w.begin(), w.end(), [](int x) { return x == 0; });
    if (zero) return true;
    auto it = memo.find(w);
    if (it != memo.end()) return it->second;
    bool ok = false;
    for (const auto& g : gens) {
        std::vector<int> r(w.size());
        bool fits = true;
        for (std::size_t k = 0; k < w.size(); ++k) {
            r[k] = w[k] - g[k];
            if (r[k] < 0) fits = false;
        }
        if (fits && in_monoid(r, gens, memo)) {
            ok = true;
            break;
        }
    }
    memo[w] = ok;
    return ok;
}

std::vector<std::vector<int>> cone_generators(const std::vector<int>& w, int e, bool below) {
    int top = *std::max_element(w.begin(), w.end()) + 1;
    std::vector<std::vector<int>> gens;
    gens.push_back(std::vector<int>(e, 1));
    for (const auto& beta : finite_positive_roots(e))
        for (int n = below ? 1 : 0; n <= top; ++n) {
            std::vector<int> g(e);
            for (int k = 0; k < e; ++k) g[k] = n + (below ? -beta[k] : beta[k]);
            gens.push_back(g);
        }
    return gens;
}

}  // namespace

bool in_cone_below_delta(const std::vector<int>& weight, int e) {
    std::map<std::vector<int>, bool> memo;
    return in_monoid(weight, cone_generators(weight, e, true), memo);
}

bool in_cone_above_delta(const std::vector<int>& weight, int e) {
    std::map<std::vector<int>, bool> memo;
    return in_monoid(weight, cone_generators(weight, e, false), memo);
}

bool is_separated(const Word& w, int e) {
    auto total = word_weight(w, e);
    for (int x : total)
        if (x != total[0]) throw DomainError("word weight is not a multiple of delta");
    for (std::size_t cut = 0; cut <= w.size(); ++cut) {
        Word left(w.begin(), w.begin() + static_cast<long>(cut));
        Word right(w.begin() + static_cast<long>(cut), w.end());
        if (!in_cone_below_delta(word_weight(left, e), e)) return false;
        if (!in_cone_above_delta(word_weight(right, e), e)) return false;
    }
    return true;
}

std::set<Word> semicuspidal_words(int e, int d) {
    if (d < 1) throw PreconditionError("d must be at least 1");
    std::vector<Word> base;
    for (int j = 1; j < e; ++j)
        for (const auto& w : delta_words(e, j)) base.push_back(w);
    std::set<Word> cur{Word{}};
    for (int k = 0; k < d; ++k) {
        std::set<Word> next;
        for (const auto& w : cur)
            for (const auto& b : base) {
                auto s = shuffles(w, b);
                next.insert(s.begin(), s.end());
            }
        cur = std::move(next);
    }
    return cur;
}

bool is_semicuspidal(const Word& w, int e) {
    if (w.empty() || w.size() % e != 0) return false;
    int d = static_cast<int>(w.size()) / e;
    std::set<Word> base;
    std::set<Word> prefixes;
    for (int j = 1; j < e; ++j)
        for (const auto& x : delta_words(e, j)) {
            base.insert(x);
            for (std::size_t k = 1; k <= x.size(); ++k) prefixes.insert(Word(x.begin(), x.begin() + static_cast<long>(k)));
        }
    // state: sorted list of open thread prefixes at position pos
    std::map<std::pair<std::size_t, std::vector<Word>>, bool> memo;
    std::function<bool(std::size_t, std::vector<Word>, int)> rec = [&](std::size_t pos, std::vector<Word> open, int started) -> bool {
        std::sort(open.begin(), open.end());
        if (pos == w.size()) return open.empty() && started == d;
        auto key = std::make_pair(pos, open);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        bool ok = false;
        int x = w[pos];
        for (std::size_t t = 0; t < open.size() && !ok; ++t) {
            if (t > 0 && open[t] == open[t - 1]) continue;
            Word ext = open[t];
            ext.push_back(x);
            if (!prefixes.count(ext)) continue;
            auto next = open;
            if (base.count(ext))
                next.erase(next.begin() + static_cast<long>(t));
            else
                next[t] = ext;
            ok = rec(pos + 1, next, started);
        }
        if (!ok && started < d && prefixes.count(Word{x})) {
            auto next = open;
            next.push_back(Word{x});
            ok = rec(pos + 1, next, started + 1);
        }
        memo[key] = ok;
        return ok;
    };
    return rec(0, {}, 0);
}

}  // namespace rock
