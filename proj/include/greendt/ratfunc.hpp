#pragma once

#include <string>

#include "greendt/vpoly.hpp"

namespace greendt {

// Rational function in v, the coefficient field of the quantum affine
// space. Normal form: denominator has min_exponent 0 and positive leading
// coefficient, gcd(num, den) is a unit monomial (any monomial unit is
// absorbed into the numerator, which may be a genuine Laurent polynomial).
class RatFunc {
public:
    RatFunc() : num_(), den_(VPoly::constant(1)) {} // zero
    RatFunc(VPoly num, VPoly den);

    static RatFunc from_integer(const Integer& c);
    static RatFunc v_power(int k); // the monomial v^k

    const VPoly& num() const { return num_; }
    const VPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RatFunc operator-() const;
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);

    RatFunc inverse() const;

    // Cross-multiplication: num_a * den_b == num_b * den_a.
    bool operator==(const RatFunc& o) const;

    // "num/den", either side parenthesized when it has several terms.
    std::string str() const;

private:
    VPoly num_;
    VPoly den_;
    void normalize();
};

} // namespace greendt
