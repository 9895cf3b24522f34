#ifndef ROOTCLUST_ERRORS_HPP
#define ROOTCLUST_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace rootclust {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Dyadic exponent left the machine-integer range, or a shift would be
// absurdly large.  Arithmetic is exact, so this is the only kernel failure.
struct OverflowError : Error {
    using Error::Error;
};

// SoftCompare exceeded the configured precision cap.  Reaching the cap means
// both compared quantities are (or are indistinguishable from) zero, which
// callers are required to rule out.
struct IterationCapError : Error {
    int64_t cap;
    explicit IterationCapError(int64_t c)
        : Error("soft comparison exceeded iteration cap of " + std::to_string(c) + " bits"),
          cap(c) {}
};

// Subdivision hit the depth limit.  The offending box is formatted into the
// message by the thrower.
struct DepthExceededError : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

struct AnalysisError : Error {
    using Error::Error;
};

struct ZeroDenominatorError : AnalysisError {
    using AnalysisError::AnalysisError;
};

struct ZeroDistanceError : AnalysisError {
    using AnalysisError::AnalysisError;
};

struct AmbiguousBoundaryError : AnalysisError {
    using AnalysisError::AnalysisError;
};

struct TooManyRootsError : AnalysisError {
    using AnalysisError::AnalysisError;
};

}  // namespace rootclust

#endif
