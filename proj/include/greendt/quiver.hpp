#pragma once

#include <optional>
#include <vector>

#include "greendt/class_vector.hpp"
#include "greendt/numeric.hpp"

namespace greendt {

struct Arrow {
    int source = 0; // 1-based
    int target = 0; // 1-based
    Integer mult = 1;
};

// A 2-acyclic quiver on vertices 1..n, stored as the matrix of arrow
// multiplicities: count(i,j) = number of arrows i -> j. The invariants
// count(i,i) = 0 and count(i,j)*count(j,i) = 0 are enforced throughout.
class Quiver {
public:
    explicit Quiver(int vertex_count);
    Quiver(int vertex_count, const std::vector<Arrow>& arrows);

    int size() const { return n_; }
    const Integer& count(int source, int target) const;

    bool operator==(const Quiver&) const = default;

private:
    friend Quiver mutate(const Quiver&, int);
    friend class FramedQuiver;

    int n_;
    std::vector<Integer> mult_; // row-major n x n

    Integer& at(int i, int j) { return mult_[static_cast<size_t>(i) * n_ + j]; }
    const Integer& at(int i, int j) const { return mult_[static_cast<size_t>(i) * n_ + j]; }
    void check_invariants() const;
};

// The principal extension of a quiver: a frozen copy i' := i + n of every
// vertex and one framing arrow i -> i'. Frozen vertices are never mutated,
// and arrows between two frozen vertices are discarded after each mutation
// (they influence nothing observable).
class FramedQuiver {
public:
    explicit FramedQuiver(const Quiver& q);

    int mutable_count() const { return n_; }
    int total_count() const { return 2 * n_; }
    bool is_frozen(int v) const { return v > n_; }
    const Integer& count(int source, int target) const;

    bool operator==(const FramedQuiver&) const = default;

private:
    friend FramedQuiver mutate(const FramedQuiver&, int);

    int n_;
    std::vector<Integer> mult_; // row-major 2n x 2n

    Integer& at(int i, int j) { return mult_[static_cast<size_t>(i) * 2 * n_ + j]; }
    const Integer& at(int i, int j) const { return mult_[static_cast<size_t>(i) * 2 * n_ + j]; }
    void check_invariants() const;
};

// Quiver mutation at vertex k: compose-through, reverse at k, cancel
// 2-cycles. An involution. The framed version additionally discards
// frozen-frozen arrows created by the compose-through rule.
Quiver mutate(const Quiver& q, int k);
FramedQuiver mutate(const FramedQuiver& f, int k);

FramedQuiver frame(const Quiver& q);

// c-vector of mutable vertex j: entry i = #(j -> i') - #(i' -> j).
ClassVector c_vector(const FramedQuiver& f, int j);

// j is green iff c_vector(f, j) is componentwise >= 0 (equivalently: no
// arrows from a frozen vertex into j). Returned in increasing order.
std::vector<int> green_vertices(const FramedQuiver& f);
bool all_red(const FramedQuiver& f);

Quiver principal_part(const FramedQuiver& f);

// Skew-symmetrized arrow-count form: lambda(e_i, e_j) = #(i->j) - #(j->i),
// extended bilinearly.
Integer lambda_form(const Quiver& q, const ClassVector& a, const ClassVector& b);

// Euler form <a,b> = sum_i a_i b_i - sum_{arrows i->j} a_i b_j. Only
// defined for acyclic quivers.
Integer euler_form(const Quiver& q, const ClassVector& a, const ClassVector& b);

// First permutation pi (in lexicographic order) with
// a.count(i,j) == b.count(pi(i), pi(j)) for all i,j; nullopt if none.
// pi is returned as a 1-based image table: pi[i-1] = pi(i).
std::optional<std::vector<int>> iso_up_to_permutation(const Quiver& a, const Quiver& b);

} // namespace greendt
