#pragma once

#include <map>
#include <utility>
#include <vector>

#include "rock/abacus.hpp"
#include "rock/laurent.hpp"
#include "rock/words.hpp"

namespace rock {

struct GradedDim {
    LaurentPoly value;
    // contributing partition -> its share of the value (prefactor included)
    std::vector<std::pair<Partition, LaurentPoly>> contributions;
};

inline LaurentPoly q_int(int m) { return LaurentPoly::q_int(m); }
inline LaurentPoly q_fact(int m) { return LaurentPoly::q_fact(m); }

// graded rank of 1_i R^{Λ0}_θ 1_j; zero when the weights differ
GradedDim cyclotomic_graded_dim(const DividedPowerWord& i, const DividedPowerWord& j, int e);

// graded rank of γ^{λ,c} C_{ρ,d} γ^{λ',c'}
GradedDim rock_truncation_dim(const RouquierCore& core, const ColoredComposition& lc, const ColoredComposition& lc2,
                              const LjChoice& lj);
GradedDim rock_truncation_dim(const RouquierCore& core, const ColoredComposition& lc, const ColoredComposition& lc2);

// Caches Std(μ\ρ, l(λ,c)^{+κ}) over the block, for repeated queries with the same core.
class RockBlockDims {
public:
    RockBlockDims(RouquierCore core, LjChoice lj);
    const RouquierCore& core() const { return core_; }
    const std::vector<Partition>& block() const { return block_; }
    // per block member: Σ_t q^{deg t}
    const std::vector<LaurentPoly>& std_polys(const ColoredComposition& lc);
    GradedDim dim(const ColoredComposition& lc, const ColoredComposition& lc2);

private:
    RouquierCore core_;
    LjChoice lj_;
    std::vector<Partition> block_;
    std::map<DividedPowerWord, std::vector<LaurentPoly>> cache_;
};

// d_j = Σ_{c_r = j} λ_r
std::vector<int> color_degrees(const ColoredComposition& lc, int e);
// dim γ^{λ,c} C γ^ω
long long closed_form_dim_lambda_omega(const ColoredComposition& lc, int e);
// d! (4e-6)^d
long long closed_form_dim_omega_omega(int e, int d);
// |S_d : S_λ| Π_t dim e_{c_t} Z ^{λ_t}
long long closed_form_module_dim(const ColoredComposition& lc, int e);

}  // namespace rock
