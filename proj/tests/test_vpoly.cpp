#include <doctest.h>

#include <random>

#include "greendt/errors.hpp"
#include "greendt/ratfunc.hpp"
#include "greendt/vpoly.hpp"

using namespace greendt;

namespace {

VPoly vp(std::initializer_list<std::pair<int, int>> terms) {
    VPoly p;
    for (const auto& [c, e] : terms)
        p += VPoly::monomial(c, e);
    return p;
}

VPoly random_poly(std::mt19937_64& rng, int max_deg, int max_coeff) {
    VPoly p;
    for (int e = 0; e <= max_deg; ++e) {
        const int c = static_cast<int>(rng() % (2 * max_coeff + 1)) - max_coeff;
        if (c != 0)
            p += VPoly::monomial(c, e);
    }
    return p;
}

} // namespace

TEST_CASE("VPoly arithmetic and structure") {
    const VPoly zero;
    CHECK(zero.is_zero());
    CHECK(zero.str() == "0");
    CHECK_THROWS_AS(zero.min_exponent(), DivisionByZeroError);

    const VPoly p = vp({{1, 3}, {-2, 1}, {1, 0}});
    CHECK(p.str() == "v^3 - 2*v + 1");
    CHECK(p.min_exponent() == 0);
    CHECK(p.max_exponent() == 3);
    CHECK(p.leading_coeff() == 1);

    CHECK(VPoly::monomial(1, -2).str() == "v^-2");
    CHECK(VPoly::monomial(-1, 1).str() == "-v");
    CHECK(VPoly::constant(5).str() == "5");
    CHECK(vp({{3, 2}, {1, 0}}).str() == "3*v^2 + 1");

    CHECK((p - p).is_zero());
    CHECK((p + (-p)).is_zero());
    CHECK(p.shifted(2) == vp({{1, 5}, {-2, 3}, {1, 2}}));
    // (v - 1)(v + 1) = v^2 - 1
    CHECK(vp({{1, 1}, {-1, 0}}) * vp({{1, 1}, {1, 0}}) == vp({{1, 2}, {-1, 0}}));
}

TEST_CASE("content and gcd") {
    CHECK(content(vp({{4, 2}, {-6, 0}})) == 2);
    CHECK(content(VPoly()) == 0);
    CHECK(primitive_part(vp({{4, 2}, {-6, 0}})) == vp({{2, 2}, {-3, 0}}));

    // gcd(v^2 - 1, v - 1) = v - 1
    CHECK(poly_gcd(vp({{1, 2}, {-1, 0}}), vp({{1, 1}, {-1, 0}})) ==
          vp({{1, 1}, {-1, 0}}));
    // coprime
    CHECK(poly_gcd(vp({{1, 1}, {1, 0}}), vp({{1, 1}, {-1, 0}})) == VPoly::constant(1));
    // content contributes
    CHECK(poly_gcd(VPoly::constant(6), VPoly::constant(4)) == VPoly::constant(2));
    // sign normalization: positive leading coefficient
    CHECK(poly_gcd(vp({{-1, 1}, {1, 0}}), vp({{-1, 1}, {1, 0}})) ==
          vp({{1, 1}, {-1, 0}}));

    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 100; ++trial) {
        const VPoly a = random_poly(rng, 6, 4);
        const VPoly b = random_poly(rng, 4, 4);
        if (a.is_zero() || b.is_zero())
            continue;
        const VPoly g = poly_gcd(a, b);
        CHECK_FALSE(g.is_zero());
        CHECK(g.leading_coeff() > 0);
        CHECK(div_exact(a, g) * g == a);
        CHECK(div_exact(b, g) * g == b);
    }
}

TEST_CASE("div_exact") {
    const VPoly p = vp({{1, 2}, {-1, 0}});
    CHECK(div_exact(p, vp({{1, 1}, {-1, 0}})) == vp({{1, 1}, {1, 0}}));
    CHECK_THROWS_AS(div_exact(p, vp({{1, 3}, {1, 1}, {1, 0}})), DivisionByZeroError);
    CHECK_THROWS_AS(div_exact(p, VPoly()), DivisionByZeroError);
    // Laurent shifts divide out
    CHECK(div_exact(p.shifted(-3), vp({{1, 1}, {-1, 0}})) ==
          vp({{1, 1}, {1, 0}}).shifted(-3));
}

TEST_CASE("RatFunc normal form") {
    // (v^2 - 1)/(v - 1) -> (v + 1)/1
    const RatFunc a(vp({{1, 2}, {-1, 0}}), vp({{1, 1}, {-1, 0}}));
    CHECK(a.num() == vp({{1, 1}, {1, 0}}));
    CHECK(a.den() == VPoly::constant(1));
    CHECK(a.str() == "(v + 1)/1");

    // inv(v) = v^-1/1: the monomial unit lands in the numerator
    const RatFunc v = RatFunc::v_power(1);
    CHECK(v.inverse().num() == VPoly::monomial(1, -1));
    CHECK(v.inverse().den() == VPoly::constant(1));
    CHECK(v.inverse().str() == "v^-1/1");

    // denominator sign normalization
    const RatFunc b(VPoly::constant(1), vp({{-1, 1}, {1, 0}}));
    CHECK(b.den().leading_coeff() > 0);
    CHECK(b.den() == vp({{1, 1}, {-1, 0}}));
    CHECK(b.num() == VPoly::constant(-1));

    CHECK(RatFunc().is_zero());
    CHECK(RatFunc().str() == "0/1");
    CHECK_THROWS_AS(RatFunc(VPoly::constant(1), VPoly()), DivisionByZeroError);
}

TEST_CASE("RatFunc arithmetic is a field") {
    const RatFunc half_q = RatFunc(VPoly::monomial(1, 1), vp({{1, 2}, {-1, 0}}));
    CHECK(half_q == half_q);
    CHECK(half_q * half_q.inverse() == RatFunc::from_integer(1));
    CHECK_THROWS_AS(RatFunc().inverse(), DivisionByZeroError);

    std::mt19937_64 rng(37);
    auto draw = [&] {
        VPoly num = random_poly(rng, 4, 3);
        VPoly den = random_poly(rng, 3, 3);
        if (den.is_zero())
            den = VPoly::constant(1);
        return RatFunc(num, den);
    };
    for (int trial = 0; trial < 100; ++trial) {
        const RatFunc x = draw(), y = draw(), z = draw();
        CHECK(x + y == y + x);
        CHECK(x * y == y * x);
        CHECK(x * (y + z) == x * y + x * z);
        CHECK((x - x).is_zero());
        if (!x.is_zero())
            CHECK(x * x.inverse() == RatFunc::from_integer(1));
    }
}

TEST_CASE("RatFunc eq by cross multiplication") {
    // q^{1/2}/(q - 1) written as v/(v^2 - 1), compared with itself scaled
    const RatFunc a(VPoly::monomial(1, 1), vp({{1, 2}, {-1, 0}}));
    const RatFunc b(VPoly::monomial(3, 1), vp({{3, 2}, {-3, 0}}));
    CHECK(a == b);
    CHECK(a == a);
    CHECK_FALSE(a == RatFunc::from_integer(1));
}
