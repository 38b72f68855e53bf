#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pgcodes {

enum class ErrorKind {
    NonPrime,
    ReduciblePolynomial,
    BadModulus,
    NoDefaultModulus,
    ZeroInverse,
    FieldMismatch,
    DimensionOutOfRange,
    AmbientMismatch,
    BudgetExceeded,
    NotACodeword,
    OddCharacteristic,
    NotSkew,
    NotAHyperoval,
    BadDimensions,
    LineNotInPlane,
    UnsupportedField,
    ClassificationOutOfBudget,
    ParseError,
};

std::string_view to_string(ErrorKind kind) noexcept;

// All library failures are reported through this exception; kind() lets
// callers (the CLI in particular) map failures to exit codes.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace pgcodes
