#pragma once

#include <map>
#include <string>

#include "greendt/numeric.hpp"

namespace greendt {

// Sparse Laurent polynomial in v with integer coefficients, v^2 = q.
// Working in v keeps every exponent integral: half powers of q like
// q^{1/2} and q^{k^2/2} become plain powers of v.
class VPoly {
public:
    VPoly() = default; // zero
    static VPoly monomial(Integer coeff, int exponent);
    static VPoly constant(Integer coeff);

    bool is_zero() const { return terms_.empty(); }
    int min_exponent() const; // nonzero polynomial only
    int max_exponent() const;
    const Integer& leading_coeff() const; // coefficient of max_exponent
    const std::map<int, Integer>& terms() const { return terms_; }

    VPoly operator-() const;
    VPoly& operator+=(const VPoly& o);
    VPoly& operator-=(const VPoly& o);
    friend VPoly operator+(VPoly a, const VPoly& b) { return a += b; }
    friend VPoly operator-(VPoly a, const VPoly& b) { return a -= b; }
    friend VPoly operator*(const VPoly& a, const VPoly& b);

    VPoly shifted(int k) const; // multiplied by v^k

    bool operator==(const VPoly&) const = default;

    // Descending exponents: "v^3 - 2*v + 1", negative exponents as "v^-2".
    std::string str() const;

private:
    std::map<int, Integer> terms_; // exponent -> nonzero coefficient
    void add_term(int exponent, const Integer& coeff);
};

// gcd of the coefficients, >= 0; 0 for the zero polynomial.
Integer content(const VPoly& p);
VPoly primitive_part(const VPoly& p);

// gcd in Z[v] (content gcd times primitive gcd, positive leading
// coefficient), computed by primitive Euclidean pseudo-remainders.
// Inputs must have min_exponent >= 0.
VPoly poly_gcd(const VPoly& a, const VPoly& b);

// Exact quotient a / b; throws on inexact division (internal misuse).
VPoly div_exact(const VPoly& a, const VPoly& b);

} // namespace greendt
