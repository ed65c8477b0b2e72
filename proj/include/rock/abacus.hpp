#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "rock/combinatorics.hpp"

namespace rock {

class AbacusDisplay {
public:
    AbacusDisplay(const Partition& lambda, int N, int e);
    // beads given as integers et+i
    static AbacusDisplay from_beads(std::vector<long> beads, int e);

    int e() const { return e_; }
    int N() const { return static_cast<int>(beads_.size()); }
    // decreasing integers et+i
    const std::vector<long>& beads() const { return beads_; }
    bool has_bead(long t, int i) const;
    int runner_count(int i) const;  // b_i
    std::vector<int> runner_counts() const;
    // bead with number r (the r-th largest); non-bead with number s (the s-th smallest)
    long bead_number(int r) const;
    long nonbead_number(int s) const;
    Partition partition() const;

private:
    AbacusDisplay() = default;
    int e_ = 2;
    std::vector<long> beads_;
};

inline AbacusDisplay abacus_of(const Partition& lambda, int N, int e) { return AbacusDisplay(lambda, N, e); }
inline Partition partition_of(const AbacusDisplay& a) { return a.partition(); }

// (r,s) in Y(lambda) iff bead number r succeeds non-bead number s
bool bead_node_duality(const AbacusDisplay& display, int r, int s);

struct CoreQuotient {
    Partition core;
    Multipartition quotient;  // component i read from runner i
    int weight = 0;
};

CoreQuotient core_quotient_weight(const Partition& lambda, int N, int e);
// inverse of the quotient map for a fixed core and N
Partition from_core_quotient(const Partition& core, const Multipartition& quotient, int N, int e);
bool is_core(const Partition& lambda, int e);

struct RouquierCore {
    Partition rho;
    int e = 2;
    int d = 1;
    int kappa = 0;
    int N = 0;  // N >= |rho| + d e, used for hooks and quotients
    std::vector<int> runner_counts;  // b_i at N

    long b_above(int i) const;  // b_{>i}
    long b_below(int i) const;  // b_{<i}
};

// witnesses N in the scanned window with runner i+1 holding >= d-1 more beads than runner i
std::vector<RouquierCore> rouquier_witnesses(const Partition& rho, int d, int e);
std::optional<RouquierCore> is_rouquier_core(const Partition& rho, int d, int e);
// smallest N >= max(l(rho), |rho| + d) with the same residue as the witness, and its bead counts
std::pair<int, std::vector<int>> minimal_witness(const RouquierCore& core);
RouquierCore make_rouquier_core(int e, int d);

struct Hook {
    long x = 0;  // vertex row
    long y = 0;  // vertex column
    int arm = 0;
    int e = 2;

    std::vector<std::pair<long, long>> nodes() const;
    std::pair<long, long> hand() const { return {x, y + arm}; }
    std::pair<long, long> foot() const { return {x + e - arm - 1, y}; }
};

Hook hook(int r, int s, int i, const RouquierCore& core);
// right / bottom extension relations between hooks
bool is_right_extension(const Hook& g, const Hook& h);
bool is_bottom_extension(const Hook& g, const Hook& h);
bool hooks_independent(const Hook& a, const Hook& b);

// quotient node (r,s,i) -> hook; throws DomainError when mu is outside the block
std::map<Node, Hook> hook_decomposition(const Partition& mu, const RouquierCore& core);

std::vector<Partition> partitions_in_block(const RouquierCore& core, int d);
std::vector<Partition> partitions_in_block(const Partition& core, int d, int e);

}  // namespace rock
