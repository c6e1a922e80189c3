#include "greendt/quiver.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "greendt/errors.hpp"

namespace greendt {

namespace {

std::string arrow_name(int i, int j) {
    return std::to_string(i) + " -> " + std::to_string(j);
}

// The three mutation rules at vertex k, all 0-based, in place.
// size x size row-major multiplicity matrix.
void mutate_matrix(std::vector<Integer>& m, int size, int k) {
    auto at = [&](int i, int j) -> Integer& {
        return m[static_cast<size_t>(i) * size + j];
    };
    // rule 1: for each path i -> k -> j add count(i,k)*count(k,j) arrows i -> j
    for (int i = 0; i < size; ++i) {
        if (i == k || at(i, k) == 0)
            continue;
        for (int j = 0; j < size; ++j) {
            if (j == k || j == i || at(k, j) == 0)
                continue;
            at(i, j) += at(i, k) * at(k, j);
        }
    }
    // rule 2: reverse all arrows with source or target k
    for (int i = 0; i < size; ++i) {
        if (i != k)
            std::swap(at(i, k), at(k, i));
    }
    // rule 3: remove a maximal set of 2-cycles
    for (int i = 0; i < size; ++i) {
        for (int j = i + 1; j < size; ++j) {
            const Integer c = std::min(at(i, j), at(j, i));
            if (c > 0) {
                at(i, j) -= c;
                at(j, i) -= c;
            }
        }
    }
}

void check_matrix_two_acyclic(const std::vector<Integer>& m, int size,
                              const char* what) {
    auto at = [&](int i, int j) -> const Integer& {
        return m[static_cast<size_t>(i) * size + j];
    };
    for (int i = 0; i < size; ++i) {
        if (at(i, i) != 0)
            throw LoopArrowError(std::string(what) + ": loop arrow " +
                                 arrow_name(i + 1, i + 1));
        for (int j = i + 1; j < size; ++j) {
            if (at(i, j) > 0 && at(j, i) > 0)
                throw TwoCycleError(std::string(what) + ": arrows " +
                                    arrow_name(i + 1, j + 1) + " and " +
                                    arrow_name(j + 1, i + 1) + " form a 2-cycle");
            if (at(i, j) < 0 || at(j, i) < 0)
                throw InvalidInputError(std::string(what) +
                                        ": negative multiplicity");
        }
    }
}

} // namespace

Quiver::Quiver(int vertex_count) : n_(vertex_count) {
    if (n_ < 1)
        throw InvalidInputError("quiver needs at least one vertex");
    mult_.assign(static_cast<size_t>(n_) * n_, Integer(0));
}

Quiver::Quiver(int vertex_count, const std::vector<Arrow>& arrows)
    : Quiver(vertex_count) {
    for (const Arrow& a : arrows) {
        if (a.source < 1 || a.source > n_ || a.target < 1 || a.target > n_)
            throw BadIndexError("arrow " + arrow_name(a.source, a.target) +
                                ": vertex out of range 1.." + std::to_string(n_));
        if (a.source == a.target)
            throw LoopArrowError("arrow " + arrow_name(a.source, a.target) +
                                 " is a loop");
        if (a.mult < 1)
            throw InvalidInputError("arrow " + arrow_name(a.source, a.target) +
                                    ": multiplicity must be >= 1");
        at(a.source - 1, a.target - 1) += a.mult;
    }
    check_invariants();
}

void Quiver::check_invariants() const {
    check_matrix_two_acyclic(mult_, n_, "quiver");
}

const Integer& Quiver::count(int source, int target) const {
    if (source < 1 || source > n_ || target < 1 || target > n_)
        throw BadIndexError("vertex out of range 1.." + std::to_string(n_));
    return at(source - 1, target - 1);
}

Quiver mutate(const Quiver& q, int k) {
    if (k < 1 || k > q.size())
        throw BadIndexError("mutate: vertex " + std::to_string(k) +
                            " out of range 1.." + std::to_string(q.size()));
    Quiver out = q;
    mutate_matrix(out.mult_, out.n_, k - 1);
    out.check_invariants();
    return out;
}

FramedQuiver::FramedQuiver(const Quiver& q) : n_(q.size()) {
    const int size = 2 * n_;
    mult_.assign(static_cast<size_t>(size) * size, Integer(0));
    for (int i = 0; i < n_; ++i) {
        for (int j = 0; j < n_; ++j)
            at(i, j) = q.at(i, j);
        at(i, i + n_) = 1; // framing arrow i -> i'
    }
    check_invariants();
}

void FramedQuiver::check_invariants() const {
    check_matrix_two_acyclic(mult_, 2 * n_, "framed quiver");
    for (int i = n_; i < 2 * n_; ++i)
        for (int j = n_; j < 2 * n_; ++j)
            if (at(i, j) != 0)
                throw InvalidInputError("framed quiver: arrow between frozen vertices " +
                                        arrow_name(i + 1, j + 1));
}

const Integer& FramedQuiver::count(int source, int target) const {
    const int size = 2 * n_;
    if (source < 1 || source > size || target < 1 || target > size)
        throw BadIndexError("vertex out of range 1.." + std::to_string(size));
    return at(source - 1, target - 1);
}

FramedQuiver mutate(const FramedQuiver& f, int k) {
    if (k < 1 || k > f.total_count())
        throw BadIndexError("mutate: vertex " + std::to_string(k) +
                            " out of range 1.." + std::to_string(f.total_count()));
    if (f.is_frozen(k))
        throw FrozenVertexError("mutate: vertex " + std::to_string(k) +
                                " is frozen");
    FramedQuiver out = f;
    mutate_matrix(out.mult_, out.total_count(), k - 1);
    // discard frozen-frozen arrows created by rule 1
    const int n = out.n_;
    for (int i = n; i < 2 * n; ++i)
        for (int j = n; j < 2 * n; ++j)
            out.at(i, j) = 0;
    out.check_invariants();
    return out;
}

FramedQuiver frame(const Quiver& q) {
    return FramedQuiver(q);
}

ClassVector c_vector(const FramedQuiver& f, int j) {
    const int n = f.mutable_count();
    if (j < 1 || j > n)
        throw BadIndexError("c_vector: vertex " + std::to_string(j) +
                            " out of range 1.." + std::to_string(n));
    ClassVector c(n);
    for (int i = 1; i <= n; ++i)
        c[i - 1] = f.count(j, i + n) - f.count(i + n, j);
    return c;
}

std::vector<int> green_vertices(const FramedQuiver& f) {
    std::vector<int> greens;
    for (int j = 1; j <= f.mutable_count(); ++j)
        if (is_nonnegative(c_vector(f, j)))
            greens.push_back(j);
    return greens;
}

bool all_red(const FramedQuiver& f) {
    return green_vertices(f).empty();
}

Quiver principal_part(const FramedQuiver& f) {
    const int n = f.mutable_count();
    std::vector<Arrow> arrows;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (f.count(i, j) > 0)
                arrows.push_back({i, j, f.count(i, j)});
    return Quiver(n, arrows);
}

Integer lambda_form(const Quiver& q, const ClassVector& a, const ClassVector& b) {
    const int n = q.size();
    if (static_cast<int>(a.size()) != n || static_cast<int>(b.size()) != n)
        throw DimensionMismatchError("lambda_form: vectors must have length " +
                                     std::to_string(n));
    Integer sum = 0;
    for (int i = 0; i < n; ++i) {
        if (a[i] == 0)
            continue;
        for (int j = 0; j < n; ++j) {
            if (b[j] == 0)
                continue;
            sum += a[i] * b[j] * (q.count(i + 1, j + 1) - q.count(j + 1, i + 1));
        }
    }
    return sum;
}

Integer euler_form(const Quiver& q, const ClassVector& a, const ClassVector& b) {
    const int n = q.size();
    if (static_cast<int>(a.size()) != n || static_cast<int>(b.size()) != n)
        throw DimensionMismatchError("euler_form: vectors must have length " +
                                     std::to_string(n));
    // acyclicity: repeatedly strip vertices with no incoming arrows
    {
        std::vector<int> indegree(n, 0);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (q.count(i + 1, j + 1) > 0)
                    ++indegree[j];
        std::vector<int> ready;
        for (int j = 0; j < n; ++j)
            if (indegree[j] == 0)
                ready.push_back(j);
        int stripped = 0;
        while (!ready.empty()) {
            const int i = ready.back();
            ready.pop_back();
            ++stripped;
            for (int j = 0; j < n; ++j)
                if (q.count(i + 1, j + 1) > 0 && --indegree[j] == 0)
                    ready.push_back(j);
        }
        if (stripped < n)
            throw CyclicQuiverError("euler_form: quiver has an oriented cycle");
    }
    Integer sum = 0;
    for (int i = 0; i < n; ++i)
        sum += a[i] * b[i];
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            sum -= q.count(i + 1, j + 1) * a[i] * b[j];
    return sum;
}

std::optional<std::vector<int>> iso_up_to_permutation(const Quiver& a, const Quiver& b) {
    if (a.size() != b.size())
        return std::nullopt;
    const int n = a.size();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool match = true;
        for (int i = 0; i < n && match; ++i)
            for (int j = 0; j < n && match; ++j)
                if (a.count(i + 1, j + 1) != b.count(perm[i] + 1, perm[j] + 1))
                    match = false;
        if (match) {
            std::vector<int> out(n);
            for (int i = 0; i < n; ++i)
                out[i] = perm[i] + 1;
            return out;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::nullopt;
}

} // namespace greendt
