#include "greendt/class_vector.hpp"

#include <algorithm>

#include "greendt/errors.hpp"

namespace greendt {

bool is_zero(const ClassVector& a) {
    return std::all_of(a.begin(), a.end(), [](const Integer& x) { return x == 0; });
}

bool is_nonnegative(const ClassVector& a) {
    return std::all_of(a.begin(), a.end(), [](const Integer& x) { return x >= 0; });
}

bool is_nonpositive(const ClassVector& a) {
    return std::all_of(a.begin(), a.end(), [](const Integer& x) { return x <= 0; });
}

bool is_sign_coherent(const ClassVector& a) {
    return !is_zero(a) && (is_nonnegative(a) || is_nonpositive(a));
}

ClassVector unit_class(int n, int i) {
    if (n < 1 || i < 1 || i > n)
        throw BadIndexError("unit_class: index " + std::to_string(i) +
                            " out of range 1.." + std::to_string(n));
    ClassVector e(n, 0);
    e[i - 1] = 1;
    return e;
}

std::string to_string(const ClassVector& a) {
    std::string out = "(";
    for (size_t i = 0; i < a.size(); ++i) {
        if (i > 0)
            out += ", ";
        out += a[i].str();
    }
    return out + ")";
}

} // namespace greendt
