#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace greendt {

// Arbitrary-precision integers and rationals. Arrow multiplicities and
// c-vector entries grow along green sequences (exponentially on wild
// quivers), so fixed-width integers are not an option anywhere.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

} // namespace greendt
