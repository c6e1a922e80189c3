#include "greendt/dt.hpp"

#include "greendt/errors.hpp"

namespace greendt {

QSeries dt_invariant(const Quiver& q, const CentralCharge& charge, int degree,
                     long long budget) {
    const GreenRun run = run_mutation_method(q, charge, budget);
    if (run.status == RunStatus::BudgetExceeded)
        throw InfiniteSpectrumError(
            "mutation method exceeded its budget of " + std::to_string(budget) +
            " steps; the invariant is undefined for this charge");
    const QAlgebra alg = algebra_for(q, degree);
    QSeries prod = qs_one(alg);
    for (const GreenStep& s : run.steps)
        prod = qs_mul(prod, qdilog(alg, s.stable_class));
    return prod;
}

QSeries keller_invariant(const Quiver& q, const std::vector<SignedStep>& steps,
                         int degree) {
    const QAlgebra alg = algebra_for(q, degree);
    QSeries prod = qs_one(alg);
    for (const SignedStep& s : steps) {
        if (s.sign != 1 && s.sign != -1)
            throw InvalidInputError("step sign must be +1 or -1");
        const QSeries e = qdilog(alg, s.tilt_class);
        prod = qs_mul(prod, s.sign == 1 ? e : qs_inv(e));
    }
    return prod;
}

bool IndependenceReport::all_equal() const {
    for (const PairVerdict& v : comparisons)
        if (!v.equal)
            return false;
    return true;
}

IndependenceReport check_independence(const Quiver& q,
                                      const std::vector<CentralCharge>& charges,
                                      int degree, long long budget) {
    if (charges.size() < 2)
        throw InvalidInputError("check_independence needs at least two charges");
    IndependenceReport report;
    for (size_t i = 0; i < charges.size(); ++i) {
        ChargeResult r;
        r.charge_index = static_cast<int>(i);
        try {
            r.series = dt_invariant(q, charges[i], degree, budget);
        } catch (const NondiscreteChargeError&) {
            r.status = ChargeStatus::Nondiscrete;
        } catch (const InfiniteSpectrumError&) {
            r.status = ChargeStatus::Infinite;
        }
        report.results.push_back(std::move(r));
    }
    for (size_t i = 0; i < report.results.size(); ++i) {
        if (report.results[i].status != ChargeStatus::Ok)
            continue;
        for (size_t j = i + 1; j < report.results.size(); ++j) {
            if (report.results[j].status != ChargeStatus::Ok)
                continue;
            report.comparisons.push_back(
                {static_cast<int>(i), static_cast<int>(j),
                 qs_eq(*report.results[i].series, *report.results[j].series)});
        }
    }
    return report;
}

} // namespace greendt
