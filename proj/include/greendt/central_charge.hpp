#pragma once

#include <compare>
#include <random>
#include <vector>

#include "greendt/class_vector.hpp"
#include "greendt/numeric.hpp"

namespace greendt {

struct RationalComplex {
    Rational re;
    Rational im;

    bool operator==(const RationalComplex&) const = default;
};

RationalComplex operator+(const RationalComplex& a, const RationalComplex& b);
RationalComplex operator*(const Integer& s, const RationalComplex& w);

// The closed upper half-plane minus the nonnegative real ray:
// im > 0, or im = 0 and re < 0. Phases lie in (0, 1].
bool in_half_plane(const RationalComplex& w);

// A central charge Z: K(A) -> C given by its values z_i = Z(S_i) on the
// simple classes; every z_i must lie in the half-plane above.
class CentralCharge {
public:
    explicit CentralCharge(std::vector<RationalComplex> values);

    int size() const { return static_cast<int>(z_.size()); }
    const RationalComplex& value(int i) const; // 1-based
    const std::vector<RationalComplex>& values() const { return z_; }

    bool operator==(const CentralCharge&) const = default;

private:
    std::vector<RationalComplex> z_;
};

// Z(a) = sum_i a_i z_i. For nonzero nonnegative a the result lies in the
// half-plane again.
RationalComplex evaluate(const CentralCharge& z, const ClassVector& a);

// Exact comparison of phases phi in (0, 1] of two nonzero half-plane
// points. Points on the negative real axis have phase 1; otherwise the
// sign of re2*im1 - re1*im2 decides. Never touches floating point.
std::strong_ordering phase_cmp(const RationalComplex& w1, const RationalComplex& w2);

// arg(w)/pi as a double, in (0, 1]. Display only; never used in control flow.
double phase_float(const RationalComplex& w);

// Seeded random rational charge with every value in the open upper
// half-plane; small numerators/denominators so ties stay unlikely.
// Deterministic given the generator state.
CentralCharge random_charge(int n, std::mt19937_64& rng);

} // namespace greendt
