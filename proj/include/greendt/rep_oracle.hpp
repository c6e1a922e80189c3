#pragma once

#include <vector>

#include "greendt/central_charge.hpp"
#include "greendt/quiver.hpp"

namespace greendt {

// Ground-truth generators for the linearly oriented A_n quiver and the
// Kronecker quiver, independent of the mutation engine.

Quiver linear_an(int n);       // 1 -> 2 -> ... -> n
Quiver kronecker_quiver();     // two arrows 1 -> 2

// Stable classes of the linear A_n quiver under Z, in strictly decreasing
// phase order. The indecomposables are the interval classes
// e_lo + ... + e_hi; an interval is stable iff every proper prefix
// [lo, k], k < hi has strictly smaller phase. Throws PhaseTieError if two
// stable classes share a phase.
std::vector<ClassVector> interval_stables_An(int n, const CentralCharge& z);

// First k classes of the divergent-side green run on the Kronecker
// quiver: (0,1), (1,2), (2,3), ...
std::vector<ClassVector> kronecker_pattern(int k);

} // namespace greendt
