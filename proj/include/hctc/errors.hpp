#pragma once

#include <stdexcept>
#include <string>

namespace hctc {

// Root of every error raised by the library. Each subclass maps to one named
// failure mode so callers can catch precisely.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define HCTC_DEFINE_ERROR(Name)          \
    class Name : public Error {          \
    public:                              \
        using Error::Error;              \
    }

HCTC_DEFINE_ERROR(InvalidArgument);
HCTC_DEFINE_ERROR(NonUnimodularRotation);
HCTC_DEFINE_ERROR(NonDivisible);
HCTC_DEFINE_ERROR(TruncationTooSmall);
HCTC_DEFINE_ERROR(DenominatorNearZero);
HCTC_DEFINE_ERROR(InvalidIndex);
HCTC_DEFINE_ERROR(RadiusOutOfRange);
HCTC_DEFINE_ERROR(BadWeights);
HCTC_DEFINE_ERROR(OriginOnCurve);
HCTC_DEFINE_ERROR(DegenerateEdge);
HCTC_DEFINE_ERROR(ParseError);
HCTC_DEFINE_ERROR(ValidationError);

#undef HCTC_DEFINE_ERROR

}  // namespace hctc
