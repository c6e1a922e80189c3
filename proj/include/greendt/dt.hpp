#pragma once

#include <optional>
#include <vector>

#include "greendt/green.hpp"
#include "greendt/qseries.hpp"

namespace greendt {

struct SignedStep {
    ClassVector tilt_class; // nonzero, componentwise >= 0
    int sign = +1;          // +1 or -1
};

// Refined DT invariant: the ordered product of quantum dilogarithms
// E(y^beta) over the stable classes of the mutation method, in decreasing
// phase order, truncated at total degree `degree`. Undefined (throws
// InfiniteSpectrumError) when the method exhausts its budget.
QSeries dt_invariant(const Quiver& q, const CentralCharge& charge, int degree,
                     long long budget = 1000);

// Keller's signed invariant: product of E(y^beta)^{+1} / E(y^beta)^{-1}
// factors in the given order.
QSeries keller_invariant(const Quiver& q, const std::vector<SignedStep>& steps,
                         int degree);

enum class ChargeStatus {
    Ok,
    Nondiscrete,
    Infinite,
};

struct ChargeResult {
    int charge_index = 0; // 0-based position in the input list
    ChargeStatus status = ChargeStatus::Ok;
    std::optional<QSeries> series; // present iff status == Ok
};

struct PairVerdict {
    int i = 0;
    int j = 0;
    bool equal = false;
};

struct IndependenceReport {
    std::vector<ChargeResult> results;
    std::vector<PairVerdict> comparisons; // every pair of Ok results

    bool all_equal() const;
};

// Computes the DT series for every charge (recording nondiscrete /
// infinite-spectrum charges instead of failing) and compares all
// successful results pairwise.
IndependenceReport check_independence(const Quiver& q,
                                      const std::vector<CentralCharge>& charges,
                                      int degree, long long budget = 1000);

} // namespace greendt
