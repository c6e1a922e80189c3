#include "greendt/ratfunc.hpp"

#include "greendt/errors.hpp"

namespace greendt {

RatFunc::RatFunc(VPoly num, VPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero())
        throw DivisionByZeroError("rational function with zero denominator");
    normalize();
}

RatFunc RatFunc::from_integer(const Integer& c) {
    return RatFunc(VPoly::constant(c), VPoly::constant(1));
}

RatFunc RatFunc::v_power(int k) {
    return RatFunc(VPoly::monomial(1, k), VPoly::constant(1));
}

void RatFunc::normalize() {
    if (num_.is_zero()) {
        den_ = VPoly::constant(1);
        return;
    }
    // Pull the monomial units out so both parts live in Z[v].
    const int sn = num_.min_exponent();
    const int sd = den_.min_exponent();
    VPoly n = num_.shifted(-sn);
    VPoly d = den_.shifted(-sd);
    const VPoly g = poly_gcd(n, d);
    n = div_exact(n, g);
    d = div_exact(d, g);
    if (d.leading_coeff() < 0) {
        n = -n;
        d = -d;
    }
    num_ = n.shifted(sn - sd);
    den_ = std::move(d);
}

RatFunc RatFunc::operator-() const {
    RatFunc r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc RatFunc::inverse() const {
    if (is_zero())
        throw DivisionByZeroError("inverse of zero rational function");
    return RatFunc(den_, num_);
}

bool RatFunc::operator==(const RatFunc& o) const {
    return num_ * o.den_ == o.num_ * den_;
}

namespace {

std::string wrapped(const VPoly& p) {
    const std::string s = p.str();
    return p.terms().size() > 1 ? "(" + s + ")" : s;
}

} // namespace

std::string RatFunc::str() const {
    return wrapped(num_) + "/" + wrapped(den_);
}

} // namespace greendt
