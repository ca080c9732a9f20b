#pragma once

#include <stdexcept>

namespace hnt {

// Base class of every error thrown by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Invalid arguments or violated preconditions (mismatched parameters,
// out-of-range symbols, operations applied outside their domain).
struct ParameterError : Error {
    using Error::Error;
};

// An enumeration or search would exceed its configured budget.
struct BudgetError : Error {
    using Error::Error;
};

}  // namespace hnt
