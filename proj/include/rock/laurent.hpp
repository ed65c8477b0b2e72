#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace rock {

// Sparse Laurent polynomial in q with exact integer coefficients.
class LaurentPoly {
public:
    using Coeff = std::int64_t;

    LaurentPoly() = default;
    LaurentPoly(Coeff c);  // NOLINT: implicit constant
    static LaurentPoly monomial(int exponent, Coeff c = 1);

    // [m] = q^{m-1} + q^{m-3} + ... + q^{1-m}
    static LaurentPoly q_int(int m);
    // [m]! = [1][2]...[m]
    static LaurentPoly q_fact(int m);

    bool is_zero() const { return terms_.empty(); }
    Coeff coeff(int exponent) const;
    const std::map<int, Coeff>& terms() const { return terms_; }
    int min_degree() const;
    int max_degree() const;

    Coeff at_one() const;
    LaurentPoly bar() const;  // q -> q^{-1}
    LaurentPoly shifted(int k) const;  // multiply by q^k
    bool nonnegative() const;

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b) { return a *= b; }
    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

    void add_term(int exponent, Coeff c);

    // e.g. "1 + q^2", "q", "0", "2q^-1 + 3"
    std::string to_string() const;

private:
    std::map<int, Coeff> terms_;
};

}  // namespace rock
