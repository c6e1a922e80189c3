#include "greendt/central_charge.hpp"

#include <cmath>

#include "greendt/errors.hpp"

namespace greendt {

namespace {

std::string complex_str(const RationalComplex& w) {
    return w.re.str() + " + " + w.im.str() + "i";
}

void require_in_half_plane(const RationalComplex& w) {
    if (!in_half_plane(w))
        throw OutOfHalfPlaneError("value " + complex_str(w) +
                                  " is outside the upper half-plane");
}

} // namespace

RationalComplex operator+(const RationalComplex& a, const RationalComplex& b) {
    return {a.re + b.re, a.im + b.im};
}

RationalComplex operator*(const Integer& s, const RationalComplex& w) {
    return {Rational(s) * w.re, Rational(s) * w.im};
}

bool in_half_plane(const RationalComplex& w) {
    return w.im > 0 || (w.im == 0 && w.re < 0);
}

CentralCharge::CentralCharge(std::vector<RationalComplex> values)
    : z_(std::move(values)) {
    if (z_.empty())
        throw InvalidInputError("central charge needs at least one value");
    for (size_t i = 0; i < z_.size(); ++i) {
        if (!in_half_plane(z_[i]))
            throw OutOfHalfPlaneError("z[" + std::to_string(i + 1) + "] = " +
                                      complex_str(z_[i]) +
                                      ": outside the upper half-plane "
                                      "(need im > 0, or im = 0 and re < 0)");
    }
}

const RationalComplex& CentralCharge::value(int i) const {
    if (i < 1 || i > size())
        throw BadIndexError("charge index " + std::to_string(i) +
                            " out of range 1.." + std::to_string(size()));
    return z_[i - 1];
}

RationalComplex evaluate(const CentralCharge& z, const ClassVector& a) {
    if (static_cast<int>(a.size()) != z.size())
        throw DimensionMismatchError("evaluate: class has length " +
                                     std::to_string(a.size()) + ", charge rank " +
                                     std::to_string(z.size()));
    if (is_zero(a))
        throw ZeroClassError("evaluate: class vector is zero");
    RationalComplex sum{0, 0};
    for (int i = 0; i < z.size(); ++i) {
        if (a[i] != 0)
            sum = sum + a[i] * z.value(i + 1);
    }
    return sum;
}

std::strong_ordering phase_cmp(const RationalComplex& w1, const RationalComplex& w2) {
    require_in_half_plane(w1);
    require_in_half_plane(w2);
    const bool axis1 = w1.im == 0; // phase exactly 1
    const bool axis2 = w2.im == 0;
    if (axis1 || axis2) {
        if (axis1 && axis2)
            return std::strong_ordering::equal;
        return axis1 ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    const Rational cross = w2.re * w1.im - w1.re * w2.im;
    if (cross > 0)
        return std::strong_ordering::greater;
    if (cross < 0)
        return std::strong_ordering::less;
    return std::strong_ordering::equal;
}

double phase_float(const RationalComplex& w) {
    require_in_half_plane(w);
    const double re = w.re.convert_to<double>();
    const double im = w.im.convert_to<double>();
    return std::atan2(im, re) / 3.14159265358979323846;
}

CentralCharge random_charge(int n, std::mt19937_64& rng) {
    if (n < 1)
        throw InvalidInputError("random_charge: rank must be >= 1");
    // rng() directly (not uniform_int_distribution) so sequences are
    // identical across standard libraries
    auto draw = [&](long long lo, long long hi) {
        return lo + static_cast<long long>(rng() % static_cast<unsigned long long>(hi - lo + 1));
    };
    std::vector<RationalComplex> z;
    z.reserve(n);
    for (int i = 0; i < n; ++i) {
        const Rational re(draw(-60, 60), draw(1, 7));
        const Rational im(draw(1, 60), draw(1, 7));
        z.push_back({re, im});
    }
    return CentralCharge(std::move(z));
}

} // namespace greendt
