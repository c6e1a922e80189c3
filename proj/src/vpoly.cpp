#include "greendt/vpoly.hpp"

#include "greendt/errors.hpp"

namespace greendt {

VPoly VPoly::monomial(Integer coeff, int exponent) {
    VPoly p;
    p.add_term(exponent, coeff);
    return p;
}

VPoly VPoly::constant(Integer coeff) { return monomial(std::move(coeff), 0); }

int VPoly::min_exponent() const {
    if (is_zero())
        throw DivisionByZeroError("min_exponent of zero polynomial");
    return terms_.begin()->first;
}

int VPoly::max_exponent() const {
    if (is_zero())
        throw DivisionByZeroError("max_exponent of zero polynomial");
    return terms_.rbegin()->first;
}

const Integer& VPoly::leading_coeff() const {
    if (is_zero())
        throw DivisionByZeroError("leading_coeff of zero polynomial");
    return terms_.rbegin()->second;
}

void VPoly::add_term(int exponent, const Integer& coeff) {
    if (coeff == 0)
        return;
    auto [it, inserted] = terms_.emplace(exponent, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0)
            terms_.erase(it);
    }
}

VPoly VPoly::operator-() const {
    VPoly r;
    for (const auto& [e, c] : terms_)
        r.terms_.emplace(e, -c);
    return r;
}

VPoly& VPoly::operator+=(const VPoly& o) {
    for (const auto& [e, c] : o.terms_)
        add_term(e, c);
    return *this;
}

VPoly& VPoly::operator-=(const VPoly& o) {
    for (const auto& [e, c] : o.terms_)
        add_term(e, -c);
    return *this;
}

VPoly operator*(const VPoly& a, const VPoly& b) {
    VPoly r;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_)
            r.add_term(ea + eb, ca * cb);
    return r;
}

VPoly VPoly::shifted(int k) const {
    VPoly r;
    for (const auto& [e, c] : terms_)
        r.terms_.emplace(e + k, c);
    return r;
}

std::string VPoly::str() const {
    if (is_zero())
        return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Integer mag = c < 0 ? Integer(-c) : c;
        if (out.empty())
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        const bool show_coeff = mag != 1 || e == 0;
        if (show_coeff)
            out += mag.str();
        if (e != 0) {
            if (show_coeff)
                out += "*";
            out += "v";
            if (e != 1)
                out += "^" + std::to_string(e);
        }
    }
    return out;
}

Integer content(const VPoly& p) {
    Integer g = 0;
    for (const auto& [e, c] : p.terms())
        g = boost::multiprecision::gcd(g, c);
    return g < 0 ? Integer(-g) : g;
}

VPoly primitive_part(const VPoly& p) {
    if (p.is_zero())
        return p;
    const Integer g = content(p);
    VPoly r;
    for (const auto& [e, c] : p.terms())
        r += VPoly::monomial(c / g, e);
    return r;
}

namespace {

// Remainder of prem(a, b): multiply a by lc(b)^(deg a - deg b + 1), then
// do ordinary polynomial division by b. Both inputs nonzero with
// min_exponent >= 0 and deg a >= deg b.
VPoly pseudo_remainder(VPoly a, const VPoly& b) {
    const int db = b.max_exponent();
    const Integer lb = b.leading_coeff();
    int steps = a.max_exponent() - db + 1;
    while (!a.is_zero() && a.max_exponent() >= db) {
        const int shift = a.max_exponent() - db;
        const Integer lead = a.leading_coeff();
        a = a * VPoly::constant(lb) - b * VPoly::monomial(lead, shift);
        --steps;
    }
    // keep the scaling uniform so the result is a true pseudo-remainder
    while (steps-- > 0)
        a = a * VPoly::constant(lb);
    return a;
}

} // namespace

VPoly poly_gcd(const VPoly& a, const VPoly& b) {
    if (a.is_zero() && b.is_zero())
        return a;
    if (a.is_zero() || b.is_zero()) {
        const VPoly& p = a.is_zero() ? b : a;
        VPoly g = primitive_part(p) * VPoly::constant(content(p));
        return g.leading_coeff() < 0 ? -g : g;
    }
    if (a.min_exponent() < 0 || b.min_exponent() < 0)
        throw InvalidInputError("poly_gcd: negative exponents");
    const Integer cg = boost::multiprecision::gcd(content(a), content(b));
    VPoly u = primitive_part(a);
    VPoly w = primitive_part(b);
    if (u.max_exponent() < w.max_exponent())
        std::swap(u, w);
    while (!w.is_zero()) {
        VPoly r = pseudo_remainder(u, w);
        u = std::move(w);
        w = primitive_part(r);
    }
    if (u.leading_coeff() < 0)
        u = -u;
    return u * VPoly::constant(cg);
}

VPoly div_exact(const VPoly& a, const VPoly& b) {
    if (b.is_zero())
        throw DivisionByZeroError("div_exact by zero polynomial");
    if (a.is_zero())
        return a;
    // Laurent-safe: strip the minimal exponents first.
    const int sa = a.min_exponent();
    const int sb = b.min_exponent();
    VPoly num = a.shifted(-sa);
    const VPoly den = b.shifted(-sb);
    const int dd = den.max_exponent();
    const Integer ld = den.leading_coeff();
    VPoly q;
    while (!num.is_zero() && num.max_exponent() >= dd) {
        const Integer lead = num.leading_coeff();
        if (lead % ld != 0)
            throw DivisionByZeroError("div_exact: inexact division");
        const VPoly t = VPoly::monomial(lead / ld, num.max_exponent() - dd);
        q += t;
        num -= den * t;
    }
    if (!num.is_zero())
        throw DivisionByZeroError("div_exact: inexact division");
    return q.shifted(sa - sb);
}

} // namespace greendt
