#pragma once

#include <stdexcept>
#include <string>

namespace wdist {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotHermitianError : Error {
    using Error::Error;
};
struct NotPSDError : Error {
    using Error::Error;
};
struct EmptySubsetError : Error {
    using Error::Error;
};
struct NotTracePreservingError : Error {
    using Error::Error;
};
struct DimensionMismatchError : Error {
    using Error::Error;
};
struct DimensionTooLargeError : Error {
    using Error::Error;
};
struct InvalidAmplitudesError : Error {
    using Error::Error;
};
struct InvalidPartitionError : Error {
    using Error::Error;
};
struct TooLargeError : Error {
    using Error::Error;
};
struct SingularDirectionError : Error {
    using Error::Error;
};
struct InvalidGateError : Error {
    using Error::Error;
};
struct ParseError : Error {
    using Error::Error;
};
struct ParameterOutOfRangeError : Error {
    using Error::Error;
};

} // namespace wdist
