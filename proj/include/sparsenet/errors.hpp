#pragma once

#include <stdexcept>
#include <string>

namespace sparsenet {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidParams : Error {
    using Error::Error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};

struct WrongOutputMode : Error {
    using Error::Error;
};

struct RegimeViolation : Error {
    using Error::Error;
};

struct SupportTooDense : Error {
    using Error::Error;
};

struct BudgetExceeded : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

} // namespace sparsenet
