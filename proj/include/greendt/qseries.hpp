#pragma once

#include <map>
#include <string>
#include <vector>

#include "greendt/class_vector.hpp"
#include "greendt/ratfunc.hpp"

namespace greendt {

class Quiver;

using Exponent = std::vector<int>;

int total_degree(const Exponent& e);

// Graded lexicographic order: total degree first, then lex.
struct GradedLex {
    bool operator()(const Exponent& a, const Exponent& b) const;
};

// The ambient data of a truncated quantum affine space: rank, truncation
// degree and the skew-symmetric form twisting the multiplication.
struct QAlgebra {
    int rank = 0;
    int degree_bound = 0;
    std::vector<std::vector<long long>> lambda;

    bool operator==(const QAlgebra&) const = default;
};

// lambda taken from the quiver's skew-symmetrized arrow counts.
QAlgebra algebra_for(const Quiver& q, int degree_bound);

// Element of the quantum affine space truncated at total degree D:
// a finite sum of terms c_alpha * y^alpha with y^alpha y^beta =
// v^{lambda(alpha,beta)} y^{alpha+beta} (v^2 = q) and |alpha| <= D.
class QSeries {
public:
    explicit QSeries(QAlgebra alg) : alg_(std::move(alg)) {}

    const QAlgebra& algebra() const { return alg_; }
    const std::map<Exponent, RatFunc, GradedLex>& terms() const { return terms_; }
    RatFunc coefficient(const Exponent& e) const; // zero if absent

    friend QSeries operator+(const QSeries& a, const QSeries& b);
    friend QSeries operator-(const QSeries& a, const QSeries& b);
    QSeries scaled(const RatFunc& c) const;

private:
    friend QSeries qs_monomial(QAlgebra, const Exponent&, const RatFunc&);
    friend QSeries qs_mul(const QSeries&, const QSeries&);
    friend QSeries qdilog(const QAlgebra&, const ClassVector&);

    QAlgebra alg_;
    std::map<Exponent, RatFunc, GradedLex> terms_;

    void add_term(const Exponent& e, const RatFunc& c); // accumulates, prunes zeros
};

QSeries qs_one(QAlgebra alg);
QSeries qs_monomial(QAlgebra alg, const Exponent& e,
                    const RatFunc& coeff = RatFunc::from_integer(1));

// y^alpha y^beta = v^{lambda(alpha,beta)} y^{alpha+beta}; terms beyond the
// degree bound are discarded.
QSeries qs_mul(const QSeries& a, const QSeries& b);

// Two-sided inverse in the truncated algebra; needs a unit constant term.
QSeries qs_inv(const QSeries& a);

// Quantum dilogarithm E(y^beta) truncated at the degree bound:
// sum_k c_k y^{k beta} with c_k = v^{k^2} / prod_{j=0}^{k-1}(q^k - q^j).
QSeries qdilog(const QAlgebra& alg, const ClassVector& beta);

bool qs_eq(const QSeries& a, const QSeries& b);

// One line per term in graded-lex order: "y[1,0]: v/(v^2 - 1)".
std::string qs_print(const QSeries& s);

} // namespace greendt
