#pragma once

#include <stdexcept>

namespace relkit {

// Base class for all toolkit errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

#define RELKIT_DEFINE_ERROR(Name)     \
    struct Name : Error {             \
        using Error::Error;           \
    };

// dimensions
RELKIT_DEFINE_ERROR(RationalOverflow)    // checked 64-bit rational arithmetic overflowed
RELKIT_DEFINE_ERROR(ZeroDenominator)
RELKIT_DEFINE_ERROR(InconsistentSystem)  // target dimension not in the span of the basis
RELKIT_DEFINE_ERROR(NonLengthVariable)   // variable carries T or M exponents

// potential
RELKIT_DEFINE_ERROR(SingularRadius)      // evaluation at r <= 0

// clifford
RELKIT_DEFINE_ERROR(IndexOutOfRange)

// dispersion
RELKIT_DEFINE_ERROR(EvanescentMode)      // no real propagating mode at this (k, beta)
RELKIT_DEFINE_ERROR(NoConvergence)
RELKIT_DEFINE_ERROR(BracketFailure)
RELKIT_DEFINE_ERROR(EigensolverFailure)

// evolve
RELKIT_DEFINE_ERROR(UnresolvableWidth)   // packet width below grid resolution
RELKIT_DEFINE_ERROR(AliasFrequency)      // carrier at or beyond Nyquist
RELKIT_DEFINE_ERROR(SingularPotentialNode)
RELKIT_DEFINE_ERROR(ZeroNorm)
RELKIT_DEFINE_ERROR(InsufficientSamples)
RELKIT_DEFINE_ERROR(WrapAmbiguity)

#undef RELKIT_DEFINE_ERROR

}  // namespace relkit
