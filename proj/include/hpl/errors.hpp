#pragma once

#include <stdexcept>
#include <string>

namespace hpl {

// Base class so callers can catch any library failure in one clause.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DegenerateInput : Error {
    using Error::Error;
};
struct Unbounded : Error {
    using Error::Error;
};
struct EmptyIntersection : Error {
    using Error::Error;
};
struct DimensionMismatch : Error {
    using Error::Error;
};
struct TooHighDimension : Error {
    using Error::Error;
};
struct SingularMatrix : Error {
    using Error::Error;
};
struct ZeroDirection : Error {
    using Error::Error;
};
struct GaugeNonPositive : Error {
    using Error::Error;
};
struct NotConverged : Error {
    using Error::Error;
};
struct StepTooLarge : Error {
    using Error::Error;
};
struct NotOrthogonal : Error {
    using Error::Error;
};
struct ConfigError : Error {
    using Error::Error;
};

}  // namespace hpl
