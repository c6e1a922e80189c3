#include "greendt/rep_oracle.hpp"

#include <algorithm>

#include "greendt/errors.hpp"

namespace greendt {

Quiver linear_an(int n) {
    std::vector<Arrow> arrows;
    for (int i = 1; i < n; ++i)
        arrows.push_back({i, i + 1, 1});
    return Quiver(n, arrows);
}

Quiver kronecker_quiver() { return Quiver(2, {{1, 2, 2}}); }

namespace {

ClassVector interval_class(int n, int lo, int hi) {
    ClassVector c(n, 0);
    for (int i = lo; i <= hi; ++i)
        c[i - 1] = 1;
    return c;
}

} // namespace

std::vector<ClassVector> interval_stables_An(int n, const CentralCharge& z) {
    if (z.size() != n)
        throw DimensionMismatchError("charge rank " + std::to_string(z.size()) +
                                     " does not match n = " + std::to_string(n));
    // Proper subobjects of the interval module [lo,hi] are the prefix
    // intervals [lo,k]; stability is the strict phase test against each.
    std::vector<ClassVector> stables;
    for (int lo = 1; lo <= n; ++lo) {
        for (int hi = lo; hi <= n; ++hi) {
            const RationalComplex whole = evaluate(z, interval_class(n, lo, hi));
            bool stable = true;
            for (int k = lo; k < hi && stable; ++k) {
                const RationalComplex prefix = evaluate(z, interval_class(n, lo, k));
                if (phase_cmp(prefix, whole) != std::strong_ordering::less)
                    stable = false;
            }
            if (stable)
                stables.push_back(interval_class(n, lo, hi));
        }
    }
    std::sort(stables.begin(), stables.end(),
              [&](const ClassVector& a, const ClassVector& b) {
                  return phase_cmp(evaluate(z, a), evaluate(z, b)) ==
                         std::strong_ordering::greater;
              });
    for (size_t i = 0; i + 1 < stables.size(); ++i) {
        if (phase_cmp(evaluate(z, stables[i]), evaluate(z, stables[i + 1])) ==
            std::strong_ordering::equal)
            throw PhaseTieError("stable classes " + to_string(stables[i]) + " and " +
                                to_string(stables[i + 1]) + " share a phase");
    }
    return stables;
}

std::vector<ClassVector> kronecker_pattern(int k) {
    std::vector<ClassVector> out;
    out.reserve(std::max(k, 0));
    for (int j = 0; j < k; ++j)
        out.push_back({Integer(j), Integer(j + 1)});
    return out;
}

} // namespace greendt
