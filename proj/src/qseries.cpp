#include "greendt/qseries.hpp"

#include <numeric>

#include "greendt/errors.hpp"
#include "greendt/quiver.hpp"

namespace greendt {

int total_degree(const Exponent& e) {
    return std::accumulate(e.begin(), e.end(), 0);
}

bool GradedLex::operator()(const Exponent& a, const Exponent& b) const {
    const int da = total_degree(a);
    const int db = total_degree(b);
    if (da != db)
        return da < db;
    return a < b;
}

QAlgebra algebra_for(const Quiver& q, int degree_bound) {
    if (degree_bound < 0)
        throw InvalidInputError("degree bound must be >= 0");
    QAlgebra alg;
    alg.rank = q.size();
    alg.degree_bound = degree_bound;
    alg.lambda.assign(alg.rank, std::vector<long long>(alg.rank, 0));
    for (int i = 1; i <= alg.rank; ++i)
        for (int j = 1; j <= alg.rank; ++j) {
            const Integer d = q.count(i, j) - q.count(j, i);
            alg.lambda[i - 1][j - 1] = d.convert_to<long long>();
        }
    return alg;
}

namespace {

void check_exponent(const QAlgebra& alg, const Exponent& e) {
    if (static_cast<int>(e.size()) != alg.rank)
        throw DimensionMismatchError("exponent vector has length " +
                                     std::to_string(e.size()) + ", algebra rank " +
                                     std::to_string(alg.rank));
    for (int x : e)
        if (x < 0)
            throw InvalidInputError("exponent vectors must be >= 0");
    if (total_degree(e) > alg.degree_bound)
        throw DegreeOverflowError("total degree " + std::to_string(total_degree(e)) +
                                  " exceeds bound " + std::to_string(alg.degree_bound));
}

long long lambda_of(const QAlgebra& alg, const Exponent& a, const Exponent& b) {
    long long s = 0;
    for (int i = 0; i < alg.rank; ++i) {
        if (a[i] == 0)
            continue;
        for (int j = 0; j < alg.rank; ++j)
            if (b[j] != 0)
                s += alg.lambda[i][j] * a[i] * b[j];
    }
    return s;
}

void check_compatible(const QAlgebra& a, const QAlgebra& b) {
    if (!(a == b))
        throw IncompatibleAlgebrasError("series live in different quantum affine spaces");
}

} // namespace

RatFunc QSeries::coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? RatFunc() : it->second;
}

void QSeries::add_term(const Exponent& e, const RatFunc& c) {
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second = it->second + c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

QSeries operator+(const QSeries& a, const QSeries& b) {
    check_compatible(a.algebra(), b.algebra());
    QSeries r = a;
    for (const auto& [e, c] : b.terms())
        r.add_term(e, c);
    return r;
}

QSeries operator-(const QSeries& a, const QSeries& b) {
    check_compatible(a.algebra(), b.algebra());
    QSeries r = a;
    for (const auto& [e, c] : b.terms())
        r.add_term(e, -c);
    return r;
}

QSeries QSeries::scaled(const RatFunc& c) const {
    QSeries r(alg_);
    if (c.is_zero())
        return r;
    for (const auto& [e, coeff] : terms_)
        r.terms_.emplace(e, coeff * c);
    return r;
}

QSeries qs_one(QAlgebra alg) {
    const int n = alg.rank;
    return qs_monomial(std::move(alg), Exponent(n, 0));
}

QSeries qs_monomial(QAlgebra alg, const Exponent& e, const RatFunc& coeff) {
    check_exponent(alg, e);
    QSeries r(std::move(alg));
    r.add_term(e, coeff);
    return r;
}

QSeries qs_mul(const QSeries& a, const QSeries& b) {
    check_compatible(a.algebra(), b.algebra());
    const QAlgebra& alg = a.algebra();
    QSeries r(alg);
    for (const auto& [ea, ca] : a.terms()) {
        const int da = total_degree(ea);
        for (const auto& [eb, cb] : b.terms()) {
            if (da + total_degree(eb) > alg.degree_bound)
                continue;
            Exponent e(alg.rank);
            for (int i = 0; i < alg.rank; ++i)
                e[i] = ea[i] + eb[i];
            const long long tw = lambda_of(alg, ea, eb);
            r.add_term(e, ca * cb * RatFunc::v_power(static_cast<int>(tw)));
        }
    }
    return r;
}

QSeries qs_inv(const QSeries& a) {
    const Exponent zero(a.algebra().rank, 0);
    const RatFunc c0 = a.coefficient(zero);
    if (c0.is_zero())
        throw NonUnitConstantTermError("qs_inv needs a nonzero constant term");
    // a = c0 (1 + u) with u of strictly positive degree (c0 is central,
    // so scaling commutes); invert by the truncated geometric series,
    // folded Horner-style: inv = 1 - u*(1 - u*(...)).
    const RatFunc c0inv = c0.inverse();
    const QSeries u = a.scaled(c0inv) - qs_one(a.algebra());
    QSeries inv = qs_one(a.algebra());
    for (int i = 0; i < a.algebra().degree_bound; ++i)
        inv = qs_one(a.algebra()) - qs_mul(u, inv);
    return inv.scaled(c0inv);
}

QSeries qdilog(const QAlgebra& alg, const ClassVector& beta) {
    if (static_cast<int>(beta.size()) != alg.rank)
        throw DimensionMismatchError("class has length " + std::to_string(beta.size()) +
                                     ", algebra rank " + std::to_string(alg.rank));
    if (is_zero(beta))
        throw ZeroClassError("qdilog of the zero class");
    if (!is_nonnegative(beta))
        throw InvalidInputError("qdilog needs a nonnegative class");
    Integer deg = 0;
    for (const Integer& x : beta)
        deg += x;
    if (deg > alg.degree_bound)
        return qs_one(alg); // every positive multiple is past the bound
    Exponent step(alg.rank);
    for (int i = 0; i < alg.rank; ++i)
        step[i] = beta[i].convert_to<int>();
    const int d = total_degree(step);
    QSeries r = qs_one(alg);
    // c_k = v^{k^2} / prod_{j<k}(q^k - q^j); successive ratio v/(q^k - 1).
    RatFunc c = RatFunc::from_integer(1);
    Exponent e(alg.rank, 0);
    for (int k = 1; k * d <= alg.degree_bound; ++k) {
        const RatFunc qk_minus_1 =
            RatFunc(VPoly::monomial(1, 2 * k) - VPoly::constant(1), VPoly::constant(1));
        c = c * RatFunc::v_power(1) * qk_minus_1.inverse();
        for (int i = 0; i < alg.rank; ++i)
            e[i] += step[i];
        r.add_term(e, c);
    }
    return r;
}

bool qs_eq(const QSeries& a, const QSeries& b) {
    check_compatible(a.algebra(), b.algebra());
    // Terms are pruned of zero coefficients and RatFunc is canonical,
    // so map equality is coefficientwise equality.
    if (a.terms().size() != b.terms().size())
        return false;
    auto ia = a.terms().begin();
    auto ib = b.terms().begin();
    for (; ia != a.terms().end(); ++ia, ++ib) {
        if (ia->first != ib->first || !(ia->second == ib->second))
            return false;
    }
    return true;
}

std::string qs_print(const QSeries& s) {
    std::string out;
    for (const auto& [e, c] : s.terms()) {
        if (!out.empty())
            out += "\n";
        out += "y[";
        for (size_t i = 0; i < e.size(); ++i) {
            if (i)
                out += ",";
            out += std::to_string(e[i]);
        }
        out += "]: " + c.str();
    }
    return out.empty() ? "0" : out;
}

} // namespace greendt
