#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qident {

// Inverting a ring element that has no multiplicative inverse.
struct NotAUnit : std::domain_error {
    explicit NotAUnit(const std::string& what) : std::domain_error(what) {}
};

// Binary series operation on operands of different truncation order.
struct OrderMismatch : std::invalid_argument {
    explicit OrderMismatch(const std::string& what) : std::invalid_argument(what) {}
};

// Substituting t = 0 into a Laurent polynomial with a negative t-exponent.
struct EvalAtZero : std::domain_error {
    explicit EvalAtZero(const std::string& what) : std::domain_error(what) {}
};

struct InvalidParameter : std::invalid_argument {
    explicit InvalidParameter(const std::string& what) : std::invalid_argument(what) {}
};

struct DivisionByZero : std::domain_error {
    explicit DivisionByZero(const std::string& what) : std::domain_error(what) {}
};

// A sequence was asked for an index beyond its materialized length.
struct SequenceTooShort : std::out_of_range {
    explicit SequenceTooShort(const std::string& what) : std::out_of_range(what) {}
};

struct FineSpecInvalid : std::invalid_argument {
    explicit FineSpecInvalid(const std::string& what) : std::invalid_argument(what) {}
};

// Carries the 0-based byte offset of the first offending character.
struct ParseError : std::runtime_error {
    std::size_t offset;

    ParseError(std::size_t off, const std::string& expected)
        : std::runtime_error("parse error at offset " + std::to_string(off) + ": " + expected),
          offset(off) {}
};

}  // namespace qident
