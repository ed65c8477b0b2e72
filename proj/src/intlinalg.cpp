#include "rock/intlinalg.hpp"

#include <algorithm>

#include "rock/errors.hpp"

namespace rock {

namespace {

// floor division for the reduction step
BigInt fdiv(const BigInt& a, const BigInt& b) {
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

bool is_zero(const IntVector& v) {
    return std::all_of(v.begin(), v.end(), [](const BigInt& x) { return x == 0; });
}

// Echelonizes rows in place with unimodular operations; the companion rows
// (if any) receive the same operations. Returns the pivot columns.
std::vector<int> echelon(IntMatrix& A, IntMatrix* companion, bool reduce_above) {
    std::size_t rows = A.size();
    if (rows == 0) return {};
    std::size_t cols = A[0].size();
    std::vector<int> pivots;
    std::size_t r = 0;
    auto row_op = [&](std::size_t dst, std::size_t src, const BigInt& k) {
        for (std::size_t c = 0; c < cols; ++c) A[dst][c] -= k * A[src][c];
        if (companion)
            for (std::size_t c = 0; c < (*companion)[dst].size(); ++c) (*companion)[dst][c] -= k * (*companion)[src][c];
    };
    auto swap_rows = [&](std::size_t a, std::size_t b) {
        std::swap(A[a], A[b]);
        if (companion) std::swap((*companion)[a], (*companion)[b]);
    };
    auto negate_row = [&](std::size_t a) {
        for (auto& x : A[a]) x = -x;
        if (companion)
            for (auto& x : (*companion)[a]) x = -x;
    };
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        while (true) {
            // smallest nonzero |entry| at or below r moves to row r
            std::size_t best = rows;
            for (std::size_t k = r; k < rows; ++k)
                if (A[k][c] != 0 && (best == rows || abs(A[k][c]) < abs(A[best][c]))) best = k;
            if (best == rows) break;
            swap_rows(r, best);
            bool done = true;
            for (std::size_t k = r + 1; k < rows; ++k) {
                if (A[k][c] == 0) continue;
                BigInt q = fdiv(A[k][c], A[r][c]);
                row_op(k, r, q);
                if (A[k][c] != 0) done = false;
            }
            if (done) break;
        }
        if (A[r][c] == 0) continue;
        if (A[r][c] < 0) negate_row(r);
        if (reduce_above)
            for (std::size_t k = 0; k < r; ++k) {
                BigInt q = fdiv(A[k][c], A[r][c]);
                if (q != 0) row_op(k, r, q);
            }
        pivots.push_back(static_cast<int>(c));
        ++r;
    }
    return pivots;
}

}  // namespace

IntMatrix hnf(const IntMatrix& M) {
    IntMatrix A = M;
    auto pivots = echelon(A, nullptr, true);
    A.resize(pivots.size());
    return A;
}

Lattice::Lattice(int ambient, const IntMatrix& generators) : ambient_(ambient) {
    for (const auto& v : generators)
        if (static_cast<int>(v.size()) != ambient) throw PreconditionError("generator length differs from ambient dimension");
    basis_ = hnf(generators);
}

bool Lattice::contains(const IntVector& v) const {
    if (static_cast<int>(v.size()) != ambient_) return false;
    IntVector r = v;
    // walk the echelon basis
    for (const auto& row : basis_) {
        std::size_t c = 0;
        while (row[c] == 0) ++c;
        for (std::size_t k = 0; k < c; ++k)
            if (r[k] != 0) return false;
        if (r[c] % row[c] != 0) return false;
        BigInt q = r[c] / row[c];
        for (std::size_t k = c; k < r.size(); ++k) r[k] -= q * row[k];
    }
    return is_zero(r);
}

bool Lattice::add(const IntMatrix& vs) {
    IntMatrix fresh;
    for (const auto& v : vs)
        if (!contains(v)) fresh.push_back(v);
    if (fresh.empty()) return false;
    IntMatrix all = basis_;
    all.insert(all.end(), fresh.begin(), fresh.end());
    basis_ = hnf(all);
    return true;
}

Lattice kernel(const IntMatrix& M, int columns) {
    // rows of [Mᵀ | I]; rows whose Mᵀ part vanishes carry a Z-basis of the kernel
    std::size_t n = static_cast<std::size_t>(columns);
    IntMatrix T(n, IntVector(M.size()));
    IntMatrix U(n, IntVector(n, 0));
    for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t r = 0; r < M.size(); ++r) T[c][r] = M[r][c];
        U[c][c] = 1;
    }
    std::size_t rank = M.empty() ? 0 : echelon(T, &U, false).size();
    IntMatrix ker(U.begin() + static_cast<long>(rank), U.end());
    return Lattice(columns, ker);
}

std::optional<IntVector> solve(const IntMatrix& M, const IntVector& b) {
    std::size_t rows = M.size();
    std::size_t cols = b.size();
    if (rows == 0) {
        if (is_zero(b)) return IntVector{};
        return std::nullopt;
    }
    IntMatrix A = M;
    IntMatrix U(rows, IntVector(rows, 0));
    for (std::size_t k = 0; k < rows; ++k) U[k][k] = 1;
    auto pivots = echelon(A, &U, false);
    // y A = b with A echelon, then x = y U
    IntVector rem = b;
    IntVector y(rows, 0);
    for (std::size_t k = 0; k < pivots.size(); ++k) {
        int c = pivots[k];
        for (int t = (k ? pivots[k - 1] + 1 : 0); t < c; ++t)
            if (rem[t] != 0) return std::nullopt;
        if (rem[c] % A[k][c] != 0) return std::nullopt;
        y[k] = rem[c] / A[k][c];
        for (std::size_t t = 0; t < cols; ++t) rem[t] -= y[k] * A[k][t];
    }
    if (!is_zero(rem)) return std::nullopt;
    IntVector x(rows, 0);
    for (std::size_t k = 0; k < rows; ++k)
        if (y[k] != 0)
            for (std::size_t t = 0; t < rows; ++t) x[t] += y[k] * U[k][t];
    return x;
}

bool member(const Lattice& L, const IntVector& v) { return L.contains(v); }

Lattice close_under(const Lattice& L, const std::function<IntVector(const IntVector&, const IntVector&)>& f) {
    Lattice cur = L;
    for (int pass = 0; pass <= L.ambient() + 1; ++pass) {
        IntMatrix products;
        for (const auto& a : cur.basis())
            for (const auto& b : cur.basis()) products.push_back(f(a, b));
        if (!cur.add(products)) return cur;
    }
    throw InvariantError("close_under did not stabilize");
}

IntVector to_big(const std::vector<long long>& v) {
    IntVector r;
    r.reserve(v.size());
    for (long long x : v) r.emplace_back(static_cast<long>(x));
    return r;
}

}  // namespace rock
