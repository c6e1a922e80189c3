#pragma once

#include <stdexcept>

namespace greendt {

// Base class of every error thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define GREENDT_ERROR(Name) \
    class Name : public Error { \
    public: \
        using Error::Error; \
    }

GREENDT_ERROR(LoopArrowError);           // arrow with source == target
GREENDT_ERROR(TwoCycleError);            // arrows in both directions between a pair
GREENDT_ERROR(BadIndexError);            // vertex index out of range
GREENDT_ERROR(FrozenVertexError);        // mutation requested at a frozen vertex
GREENDT_ERROR(CyclicQuiverError);        // Euler form needs an acyclic quiver
GREENDT_ERROR(ZeroClassError);           // a nonzero class vector was required
GREENDT_ERROR(OutOfHalfPlaneError);      // complex value outside the upper half-plane
GREENDT_ERROR(NondiscreteChargeError);   // two stable classes tied at maximal phase
GREENDT_ERROR(DimensionMismatchError);   // rank of vector/charge/quiver disagree
GREENDT_ERROR(SelfDualityViolatedError); // final state failed the -permutation check
GREENDT_ERROR(NotMaximalError);          // operation needs a MaximalReached run
GREENDT_ERROR(DivisionByZeroError);      // rational-function division by zero
GREENDT_ERROR(DegreeOverflowError);      // exponent vector beyond the degree bound
GREENDT_ERROR(IncompatibleAlgebrasError);// series from different quantum affine spaces
GREENDT_ERROR(NonUnitConstantTermError); // series inverse needs a unit constant term
GREENDT_ERROR(InfiniteSpectrumError);    // mutation method ran out of budget, DT undefined
GREENDT_ERROR(PhaseTieError);            // oracle found two stables of equal phase
GREENDT_ERROR(ParseError);               // malformed input file
GREENDT_ERROR(InvalidInputError);        // other precondition breach

#undef GREENDT_ERROR

} // namespace greendt
