#pragma once

#include <string>
#include <vector>

#include "greendt/numeric.hpp"

namespace greendt {

// An element of the class lattice K(A) = Z^n written in the basis of the
// simple classes [S_1], ..., [S_n].
using ClassVector = std::vector<Integer>;

bool is_zero(const ClassVector& a);
bool is_nonnegative(const ClassVector& a);
bool is_nonpositive(const ClassVector& a);

// Nonzero and componentwise >= 0 or componentwise <= 0.
bool is_sign_coherent(const ClassVector& a);

// The standard basis vector e_i (1-based i) of length n.
ClassVector unit_class(int n, int i);

// "(1, 0, -2)"
std::string to_string(const ClassVector& a);

} // namespace greendt
