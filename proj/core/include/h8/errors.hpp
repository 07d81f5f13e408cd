#pragma once

#include <stdexcept>
#include <string>

namespace h8 {

// Common base so callers can catch everything the library throws in one place.
// The CLI maps these onto exit codes: ArgumentError -> 2, CacheError/IoError -> 3.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// evaluation at (or within tolerance of) a pole
struct PoleError : Error {
    using Error::Error;
};

// input outside the supported region, or a work bound would be exceeded
struct RangeError : Error {
    using Error::Error;
};

// invalid argument combination, config key, or CLI usage
struct ArgumentError : Error {
    using Error::Error;
};

// a function value vanishes (or nearly so) where a nonzero value is required,
// e.g. log-derivative evaluation next to a zero, or a contour passing through one
struct NearZeroError : Error {
    using Error::Error;
};

// cache file has bad magic, version, or contents
struct CacheError : Error {
    using Error::Error;
};

// filesystem failure (open/read/write)
struct IoError : Error {
    using Error::Error;
};

} // namespace h8
