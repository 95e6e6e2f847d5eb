#pragma once

#include <stdexcept>
#include <string>

namespace tightsrg {

// Base class for every error thrown by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

#define TIGHTSRG_DEFINE_ERROR(Name)        \
    struct Name : Error {                  \
        using Error::Error;                \
    }

// srg module
TIGHTSRG_DEFINE_ERROR(IdentityViolated);
TIGHTSRG_DEFINE_ERROR(NotPrimitive);
TIGHTSRG_DEFINE_ERROR(NonIntegralSpectrum);
TIGHTSRG_DEFINE_ERROR(NonIntegral);
TIGHTSRG_DEFINE_ERROR(NegativeLambda);

// designs module
TIGHTSRG_DEFINE_ERROR(NotDesign);
TIGHTSRG_DEFINE_ERROR(PreconditionViolated);
TIGHTSRG_DEFINE_ERROR(FormatError);

// nonexistence module
TIGHTSRG_DEFINE_ERROR(InvalidPrime);
TIGHTSRG_DEFINE_ERROR(ZeroInput);

// graphs module
TIGHTSRG_DEFINE_ERROR(TooSmall);
TIGHTSRG_DEFINE_ERROR(NotRegular);
TIGHTSRG_DEFINE_ERROR(NotStronglyRegular);
TIGHTSRG_DEFINE_ERROR(NotIndependent);
TIGHTSRG_DEFINE_ERROR(OutsideDegreeViolated);
TIGHTSRG_DEFINE_ERROR(WrongSize);
TIGHTSRG_DEFINE_ERROR(NotTight);
TIGHTSRG_DEFINE_ERROR(SameCoclique);
TIGHTSRG_DEFINE_ERROR(WrongFamily);
TIGHTSRG_DEFINE_ERROR(WrongCount);
TIGHTSRG_DEFINE_ERROR(SrgAssertionFailed);
TIGHTSRG_DEFINE_ERROR(SelfCheckFailed);
TIGHTSRG_DEFINE_ERROR(VerificationFailed);

// graph6 codec
TIGHTSRG_DEFINE_ERROR(MalformedHeader);
TIGHTSRG_DEFINE_ERROR(TruncatedBits);
TIGHTSRG_DEFINE_ERROR(NonCanonicalPadding);

// search module
TIGHTSRG_DEFINE_ERROR(InvalidBase);

#undef TIGHTSRG_DEFINE_ERROR

}  // namespace tightsrg
