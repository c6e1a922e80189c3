#include <doctest.h>

#include <random>

#include "greendt/dt.hpp"
#include "greendt/errors.hpp"
#include "greendt/rep_oracle.hpp"

using namespace greendt;

namespace {

RationalComplex rc(long long re, long long im) {
    return {Rational(re), Rational(im)};
}

CentralCharge a2_charge_s2_first() { return CentralCharge({rc(1, 1), rc(-1, 1)}); }
CentralCharge a2_charge_s1_first() { return CentralCharge({rc(-1, 1), rc(1, 1)}); }

} // namespace

TEST_CASE("dt_invariant matches the ordered dilogarithm product") {
    const Quiver q = linear_an(2);
    const QAlgebra alg = algebra_for(q, 8);

    const QSeries two_step = dt_invariant(q, a2_charge_s1_first(), 8);
    CHECK(qs_eq(two_step, qs_mul(qdilog(alg, {1, 0}), qdilog(alg, {0, 1}))));

    const QSeries three_step = dt_invariant(q, a2_charge_s2_first(), 8);
    CHECK(qs_eq(three_step,
                qs_mul(qs_mul(qdilog(alg, {0, 1}), qdilog(alg, {1, 1})),
                       qdilog(alg, {1, 0}))));

    // n = 1: a single dilogarithm for every valid charge
    const Quiver one(1);
    const QSeries s = dt_invariant(one, CentralCharge({rc(-2, 3)}), 5);
    CHECK(qs_eq(s, qdilog(algebra_for(one, 5), {1})));
}

TEST_CASE("dt_invariant refuses divergent and nondiscrete charges") {
    CHECK_THROWS_AS(dt_invariant(kronecker_quiver(), a2_charge_s2_first(), 4, 50),
                    InfiniteSpectrumError);
    CHECK_THROWS_AS(
        dt_invariant(linear_an(2), CentralCharge({rc(1, 1), rc(1, 1)}), 4),
        NondiscreteChargeError);
}

TEST_CASE("keller_invariant") {
    const Quiver q = linear_an(2);
    const QAlgebra alg = algebra_for(q, 8);
    const ClassVector beta{1, 1};

    CHECK(qs_eq(keller_invariant(q, {{beta, +1}}, 8), qdilog(alg, beta)));
    CHECK(qs_eq(keller_invariant(q, {{beta, +1}, {beta, -1}}, 8), qs_one(alg)));
    CHECK_THROWS_AS(keller_invariant(q, {{beta, 2}}, 8), InvalidInputError);

    // all-positive signed steps of a maximal run reproduce dt_invariant
    const GreenRun run = run_mutation_method(q, a2_charge_s2_first());
    std::vector<SignedStep> steps;
    for (const ClassVector& c : stable_classes(run))
        steps.push_back({c, +1});
    CHECK(qs_eq(keller_invariant(q, steps, 8),
                dt_invariant(q, a2_charge_s2_first(), 8)));

    // a run followed by its reverse with flipped signs cancels
    std::vector<SignedStep> round_trip = steps;
    for (auto it = steps.rbegin(); it != steps.rend(); ++it)
        round_trip.push_back({it->tilt_class, -1});
    CHECK(qs_eq(keller_invariant(q, round_trip, 8), qs_one(alg)));
}

TEST_CASE("check_independence on A2 is the pentagon identity") {
    const IndependenceReport report = check_independence(
        linear_an(2), {a2_charge_s2_first(), a2_charge_s1_first()}, 12);
    REQUIRE(report.results.size() == 2);
    CHECK(report.results[0].status == ChargeStatus::Ok);
    CHECK(report.results[1].status == ChargeStatus::Ok);
    REQUIRE(report.comparisons.size() == 1);
    CHECK(report.comparisons[0].i == 0);
    CHECK(report.comparisons[0].j == 1);
    CHECK(report.comparisons[0].equal);
    CHECK(report.all_equal());
}

TEST_CASE("check_independence reports failures per charge") {
    // identical charge twice: trivially equal
    const IndependenceReport same = check_independence(
        linear_an(2), {a2_charge_s1_first(), a2_charge_s1_first()}, 6);
    CHECK(same.all_equal());
    CHECK(same.comparisons.size() == 1);

    // Kronecker with one divergent charge: reported, not compared
    const IndependenceReport kron = check_independence(
        kronecker_quiver(), {a2_charge_s1_first(), a2_charge_s2_first()}, 4, 50);
    REQUIRE(kron.results.size() == 2);
    CHECK(kron.results[0].status == ChargeStatus::Ok);
    CHECK(kron.results[1].status == ChargeStatus::Infinite);
    CHECK_FALSE(kron.results[1].series.has_value());
    CHECK(kron.comparisons.empty());
    CHECK(kron.all_equal()); // vacuously

    // nondiscrete charge recorded as such
    const IndependenceReport nd = check_independence(
        linear_an(2), {a2_charge_s1_first(), CentralCharge({rc(1, 1), rc(1, 1)})}, 4);
    CHECK(nd.results[1].status == ChargeStatus::Nondiscrete);

    CHECK_THROWS_AS(check_independence(linear_an(2), {a2_charge_s1_first()}, 4),
                    InvalidInputError);
}

TEST_CASE("charge independence on A3 and the oriented 3-cycle") {
    std::mt19937_64 rng(59);
    const Quiver a3 = linear_an(3);
    const Quiver cycle(3, {{1, 2, 1}, {2, 3, 1}, {3, 1, 1}});
    for (const Quiver& q : {a3, cycle}) {
        std::vector<CentralCharge> charges;
        while (charges.size() < 4)
            charges.push_back(random_charge(q.size(), rng));
        const IndependenceReport report = check_independence(q, charges, 6, 300);
        int ok = 0;
        for (const ChargeResult& r : report.results)
            if (r.status == ChargeStatus::Ok)
                ++ok;
        CHECK(ok >= 2);
        CHECK(report.all_equal());
    }
}

TEST_CASE("permutation equivariance of the DT series") {
    // relabel A2 by the transposition: arrows 2 -> 1, charge swapped
    const Quiver q = linear_an(2);
    const Quiver qp(2, {{2, 1, 1}});
    const CentralCharge z = a2_charge_s2_first();
    const CentralCharge zp({z.value(2), z.value(1)});
    const QSeries s = dt_invariant(q, z, 8);
    const QSeries sp = dt_invariant(qp, zp, 8);
    for (const auto& [e, c] : s.terms()) {
        const Exponent swapped{e[1], e[0]};
        CHECK(sp.coefficient(swapped) == c);
    }
    CHECK(s.terms().size() == sp.terms().size());
}
