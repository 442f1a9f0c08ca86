#ifndef ULAB_ERRORS_HPP
#define ULAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ulab {

// Error taxonomy. The CLI maps categories to exit codes:
// precondition -> 2, budget -> 3, internal -> 4.
enum class ErrorKind {
    precondition,   // bad input, violated contract, unsupported parameter
    budget,         // configured search/precision budget exhausted
    internal,       // invariant failure inside the library itself
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string what)
        : std::runtime_error(std::move(what)), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

struct PreconditionError : Error {
    explicit PreconditionError(std::string what)
        : Error(ErrorKind::precondition, std::move(what)) {}
};

struct BudgetExceeded : Error {
    explicit BudgetExceeded(std::string what)
        : Error(ErrorKind::budget, std::move(what)) {}
};

// Raised when a value-basis closure cannot certify saturation below the
// working precision; callers should retry with a larger precision.
struct PrecisionExhausted : Error {
    explicit PrecisionExhausted(std::string what)
        : Error(ErrorKind::budget, std::move(what)) {}
};

struct InternalError : Error {
    explicit InternalError(std::string what)
        : Error(ErrorKind::internal, std::move(what)) {}
};

} // namespace ulab

#endif
