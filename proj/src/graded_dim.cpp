#include "rock/graded_dim.hpp"

#include "rock/errors.hpp"
#include "rock/tableaux.hpp"

namespace rock {

GradedDim cyclotomic_graded_dim(const DividedPowerWord& i, const DividedPowerWord& j, int e) {
    GradedDim g;
    auto wi = i.weight(e);
    if (wi != j.weight(e)) return g;
    int ht = i.length();
    for (const auto& mu : partitions_of(ht)) {
        if (content(mu, e) != wi) continue;
        SkewShape sh(mu);
        LaurentPoly p = std_degree_poly(sh, i, e) * std_degree_poly(sh, j, e);
        if (p.is_zero()) continue;
        p = p.shifted(j.angle() - i.angle());
        g.value += p;
        g.contributions.emplace_back(mu, p);
    }
    return g;
}

RockBlockDims::RockBlockDims(RouquierCore core, LjChoice lj) : core_(std::move(core)), lj_(std::move(lj)) {
    if (!is_rouquier_core(core_.rho, core_.d, core_.e)) throw DomainError("core is not d-Rouquier");
    block_ = partitions_in_block(core_, core_.d);
}

const std::vector<LaurentPoly>& RockBlockDims::std_polys(const ColoredComposition& lc) {
    if (lc.size() != core_.d) throw PreconditionError("|lambda| must equal d");
    DividedPowerWord w = gg_word(lc, lj_).shifted(core_.kappa, core_.e);
    auto it = cache_.find(w);
    if (it != cache_.end()) return it->second;
    std::vector<LaurentPoly> polys;
    for (const auto& mu : block_) polys.push_back(std_degree_poly(SkewShape(mu, core_.rho), w, core_.e));
    return cache_.emplace(w, std::move(polys)).first->second;
}

GradedDim RockBlockDims::dim(const ColoredComposition& lc, const ColoredComposition& lc2) {
    const auto a = std_polys(lc);
    const auto& b = std_polys(lc2);
    int shift = a_lambda(lc, core_.e) - a_lambda(lc2, core_.e);
    GradedDim g;
    for (std::size_t k = 0; k < block_.size(); ++k) {
        LaurentPoly p = a[k] * b[k];
        if (p.is_zero()) continue;
        p = p.shifted(shift);
        g.value += p;
        g.contributions.emplace_back(block_[k], p);
    }
    return g;
}

GradedDim rock_truncation_dim(const RouquierCore& core, const ColoredComposition& lc, const ColoredComposition& lc2,
                              const LjChoice& lj) {
    RockBlockDims r(core, lj);
    return r.dim(lc, lc2);
}

GradedDim rock_truncation_dim(const RouquierCore& core, const ColoredComposition& lc, const ColoredComposition& lc2) {
    return rock_truncation_dim(core, lc, lc2, LjChoice::canonical(core.e));
}

std::vector<int> color_degrees(const ColoredComposition& lc, int e) {
    std::vector<int> d(e, 0);
    for (int r = 0; r < lc.length(); ++r) d[lc.colors[r]] += lc.lambda.parts[r];
    return d;
}

namespace {

long long ipow(long long b, int k) {
    long long r = 1;
    while (k-- > 0) r *= b;
    return r;
}

}  // namespace

long long closed_form_dim_lambda_omega(const ColoredComposition& lc, int e) {
    long long idx = multinomial_index(lc.lambda);
    auto dj = color_degrees(lc, e);
    if (e == 2) return idx * ipow(2, dj[1]);
    long long r = idx * ipow(3, dj[1] + dj[e - 1]);
    for (int j = 2; j <= e - 2; ++j) r *= ipow(4, dj[j]);
    return r;
}

long long closed_form_dim_omega_omega(int e, int d) { return factorial(d) * ipow(4LL * e - 6, d); }

long long closed_form_module_dim(const ColoredComposition& lc, int e) {
    // dim e_j Z: 2 when e = 2, 3 at the ends, 4 in the interior
    long long r = multinomial_index(lc.lambda);
    for (int t = 0; t < lc.length(); ++t) {
        int j = lc.colors[t];
        int dj = e == 2 ? 2 : (j == 1 || j == e - 1 ? 3 : 4);
        r *= ipow(dj, lc.lambda.parts[t]);
    }
    return r;
}

}  // namespace rock
