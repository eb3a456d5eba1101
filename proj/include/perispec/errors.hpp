#ifndef PERISPEC_ERRORS_HPP
#define PERISPEC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace perispec {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ShapeMismatch : Error { using Error::Error; };
struct NonFiniteEntry : Error { using Error::Error; };
struct UnsupportedPeriod : Error { using Error::Error; };
struct IndexOutOfRange : Error { using Error::Error; };
struct NonHermitianInput : Error { using Error::Error; };
struct ConvergenceFailure : Error { using Error::Error; };
struct UnsupportedSize : Error { using Error::Error; };
struct BudgetExceeded : Error { using Error::Error; };
struct NotSchroedinger : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };

} // namespace perispec

#endif
