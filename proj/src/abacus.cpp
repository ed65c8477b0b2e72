#include "rock/abacus.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "rock/errors.hpp"

namespace rock {

namespace {

long floor_div(long a, long b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }

int mod(long a, int e) { return static_cast<int>(((a % e) + e) % e); }

}  // namespace

AbacusDisplay::AbacusDisplay(const Partition& lambda, int N, int e) : e_(e) {
    if (e < 2) throw PreconditionError("e must be at least 2");
    if (N < lambda.length()) throw PreconditionError("bead count N smaller than the length of the partition");
    for (int k = 1; k <= N; ++k) beads_.push_back(lambda.row(k) + N - k);
}

AbacusDisplay AbacusDisplay::from_beads(std::vector<long> beads, int e) {
    AbacusDisplay a;
    a.e_ = e;
    std::sort(beads.begin(), beads.end(), std::greater<>());
    if (std::adjacent_find(beads.begin(), beads.end()) != beads.end()) throw PreconditionError("repeated bead");
    if (!beads.empty() && beads.back() < 0) throw PreconditionError("negative bead position");
    a.beads_ = std::move(beads);
    return a;
}

bool AbacusDisplay::has_bead(long t, int i) const {
    long x = static_cast<long>(e_) * t + i;
    return std::find(beads_.begin(), beads_.end(), x) != beads_.end();
}

int AbacusDisplay::runner_count(int i) const {
    int n = 0;
    for (long x : beads_)
        if (mod(x, e_) == i) ++n;
    return n;
}

std::vector<int> AbacusDisplay::runner_counts() const {
    std::vector<int> b(e_, 0);
    for (long x : beads_) ++b[mod(x, e_)];
    return b;
}

long AbacusDisplay::bead_number(int r) const {
    if (r < 1 || r > N()) throw PreconditionError("bead number out of range");
    return beads_[r - 1];
}

long AbacusDisplay::nonbead_number(int s) const {
    if (s < 1) throw PreconditionError("non-bead number out of range");
    std::set<long> b(beads_.begin(), beads_.end());
    int seen = 0;
    for (long x = 0;; ++x) {
        if (b.count(x)) continue;
        if (++seen == s) return x;
    }
}

Partition AbacusDisplay::partition() const {
    std::vector<int> parts;
    int n = N();
    for (int k = 1; k <= n; ++k) parts.push_back(static_cast<int>(beads_[k - 1] - n + k));
    return Partition(parts);
}

bool bead_node_duality(const AbacusDisplay& display, int r, int s) {
    if (r < 1 || s < 1) throw PreconditionError("node coordinates must be positive");
    if (r > display.N()) return false;
    return display.bead_number(r) > display.nonbead_number(s);
}

CoreQuotient core_quotient_weight(const Partition& lambda, int N, int e) {
    AbacusDisplay a(lambda, N, e);
    auto b = a.runner_counts();
    std::vector<long> core_beads;
    for (int i = 0; i < e; ++i)
        for (int t = 0; t < b[i]; ++t) core_beads.push_back(static_cast<long>(e) * t + i);
    CoreQuotient cq;
    cq.core = AbacusDisplay::from_beads(core_beads, e).partition();
    std::vector<Partition> comps(e);
    for (int i = 0; i < e; ++i) {
        std::vector<long> ts;
        for (long x : a.beads())
            if (mod(x, e) == i) ts.push_back(floor_div(x, e));
        std::sort(ts.begin(), ts.end(), std::greater<>());
        std::vector<int> parts;
        for (int k = 1; k <= b[i]; ++k) parts.push_back(static_cast<int>(ts[k - 1] - b[i] + k));
        comps[i] = Partition(parts);
    }
    cq.quotient = Multipartition(comps);
    cq.weight = cq.quotient.size();
    return cq;
}

Partition from_core_quotient(const Partition& core, const Multipartition& quotient, int N, int e) {
    if (quotient.count() != e) throw PreconditionError("quotient must have e components");
    AbacusDisplay a(core, N, e);
    auto b = a.runner_counts();
    std::vector<long> beads;
    for (int i = 0; i < e; ++i) {
        const Partition& p = quotient.components[i];
        if (p.length() > b[i]) throw PreconditionError("runner holds too few beads for this quotient component");
        for (int k = 1; k <= b[i]; ++k) beads.push_back(static_cast<long>(e) * (p.row(k) + b[i] - k) + i);
    }
    return AbacusDisplay::from_beads(beads, e).partition();
}

bool is_core(const Partition& lambda, int e) { return core_quotient_weight(lambda, lambda.length(), e).weight == 0; }

long RouquierCore::b_above(int i) const {
    long s = 0;
    for (int j = i + 1; j < e; ++j) s += runner_counts[j];
    return s;
}

long RouquierCore::b_below(int i) const {
    long s = 0;
    for (int j = 0; j < i; ++j) s += runner_counts[j];
    return s;
}

std::vector<RouquierCore> rouquier_witnesses(const Partition& rho, int d, int e) {
    if (d < 1) throw PreconditionError("d must be at least 1");
    if (e < 2) throw PreconditionError("e must be at least 2");
    std::vector<RouquierCore> out;
    if (!is_core(rho, e)) return out;
    int n0 = std::max(rho.length(), rho.size()) + d * e * e;
    for (int N = n0; N < n0 + e; ++N) {
        auto b = AbacusDisplay(rho, N, e).runner_counts();
        bool ok = true;
        for (int i = 0; i + 1 < e; ++i)
            if (b[i + 1] < b[i] + d - 1) ok = false;
        if (!ok) continue;
        RouquierCore c;
        c.rho = rho;
        c.e = e;
        c.d = d;
        c.N = N;
        c.kappa = mod(-static_cast<long>(N), e);
        c.runner_counts = b;
        out.push_back(c);
    }
    return out;
}

std::optional<RouquierCore> is_rouquier_core(const Partition& rho, int d, int e) {
    auto w = rouquier_witnesses(rho, d, e);
    if (w.empty()) return std::nullopt;
    return w.front();
}

std::pair<int, std::vector<int>> minimal_witness(const RouquierCore& core) {
    int N = core.N;
    int floor = std::max(core.rho.length(), core.rho.size() + core.d);
    while (N - core.e >= floor) N -= core.e;
    return {N, AbacusDisplay(core.rho, N, core.e).runner_counts()};
}

RouquierCore make_rouquier_core(int e, int d) {
    if (d < 1 || e < 2) throw PreconditionError("make_rouquier_core needs e >= 2 and d >= 1");
    std::vector<long> beads;
    for (int i = 0; i < e; ++i)
        for (int t = 0; t < (d - 1) * i + 1; ++t) beads.push_back(static_cast<long>(e) * t + i);
    int n = static_cast<int>(beads.size());
    Partition rho = AbacusDisplay::from_beads(beads, e).partition();
    for (const auto& w : rouquier_witnesses(rho, d, e))
        if ((w.N - n) % e == 0) return w;
    throw InvariantError("constructed core failed the Rouquier check");
}

std::vector<std::pair<long, long>> Hook::nodes() const {
    std::vector<std::pair<long, long>> out;
    for (int k = 0; k <= arm; ++k) out.emplace_back(x, y + k);
    for (int k = 1; k <= e - arm - 1; ++k) out.emplace_back(x + k, y);
    return out;
}

Hook hook(int r, int s, int i, const RouquierCore& core) {
    if (r < 1 || s < 1 || i < 0 || i >= core.e) throw PreconditionError("hook index outside N^I");
    int e = core.e;
    long a = core.runner_counts[i] - r + s;
    Hook h;
    h.e = e;
    h.arm = i;
    h.x = r - static_cast<long>(e - i - 1) * a + core.b_above(i);
    h.y = s + static_cast<long>(i) * a - core.b_below(i);
    return h;
}

bool is_right_extension(const Hook& g, const Hook& h) {
    auto [hx, hy] = h.hand();
    return g.foot() == std::make_pair(hx, hy + 1);
}

bool is_bottom_extension(const Hook& g, const Hook& h) {
    auto [fx, fy] = h.foot();
    return g.hand() == std::make_pair(fx + 1, fy);
}

bool hooks_independent(const Hook& a, const Hook& b) {
    for (auto [r1, s1] : a.nodes())
        for (auto [r2, s2] : b.nodes()) {
            if (r1 <= r2 && s1 <= s2) return false;
            if (r2 <= r1 && s2 <= s1) return false;
        }
    return true;
}

std::map<Node, Hook> hook_decomposition(const Partition& mu, const RouquierCore& core) {
    if (mu.length() > core.N) throw DomainError("partition " + mu.to_string() + " is not in the block");
    auto cq = core_quotient_weight(mu, core.N, core.e);
    if (cq.core != core.rho || cq.weight > core.d)
        throw DomainError("partition " + mu.to_string() + " is not in the block of " + core.rho.to_string());
    std::map<Node, Hook> out;
    std::set<std::pair<long, long>> covered;
    for (int r = 1; r <= core.rho.length(); ++r)
        for (int s = 1; s <= core.rho.row(r); ++s) covered.insert({r, s});
    for (int i = 0; i < core.e; ++i) {
        const Partition& p = cq.quotient.components[i];
        for (int r = 1; r <= p.length(); ++r)
            for (int s = 1; s <= p.row(r); ++s) {
                Hook h = hook(r, s, i, core);
                for (auto u : h.nodes())
                    if (!covered.insert(u).second) throw InvariantError("hooks overlap");
                out.emplace(Node{r, s, i}, h);
            }
    }
    std::set<std::pair<long, long>> ymu;
    for (int r = 1; r <= mu.length(); ++r)
        for (int s = 1; s <= mu.row(r); ++s) ymu.insert({r, s});
    if (ymu != covered) throw InvariantError("hooks do not tile the skew diagram");
    return out;
}

namespace {

std::vector<Partition> block_at(const Partition& core, int d, int N, int e) {
    // bump N by multiples of e until every runner holds at least d beads
    while (true) {
        auto b = AbacusDisplay(core, N, e).runner_counts();
        if (*std::min_element(b.begin(), b.end()) >= d) break;
        N += e;
    }
    std::vector<Partition> out;
    for (const auto& q : multipartitions(e, d)) out.push_back(from_core_quotient(core, q, N, e));
    return out;
}

}  // namespace

std::vector<Partition> partitions_in_block(const RouquierCore& core, int d) { return block_at(core.rho, d, core.N, core.e); }

std::vector<Partition> partitions_in_block(const Partition& core, int d, int e) {
    if (!is_core(core, e)) throw DomainError(core.to_string() + " is not an e-core");
    return block_at(core, d, std::max(core.length(), 1) * e, e);
}

}  // namespace rock
