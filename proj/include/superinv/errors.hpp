#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace superinv {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Caller misuse: mismatched tables, zero divisors, bad arguments.
struct UsageError : Error {
    using Error::Error;
};

struct ParseError : UsageError {
    ParseError(const std::string& what, std::size_t pos)
        : UsageError(what + " at position " + std::to_string(pos)), position(pos) {}
    std::size_t position;
};

struct CatalogError : Error {
    using Error::Error;
};

struct EnumerationError : Error {
    using Error::Error;
};

struct CapExceeded : Error {
    using Error::Error;
};

struct ContractViolation : Error {
    using Error::Error;
};

struct NotFound : Error {
    using Error::Error;
};

struct TheoremViolation : Error {
    using Error::Error;
};

}  // namespace superinv
