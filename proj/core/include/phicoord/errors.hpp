#pragma once

#include <stdexcept>
#include <string>

namespace phicoord {

/// A requested coefficient lies outside the computed validity guarantee.
/// Never a mathematical failure: recomputing at higher order may succeed.
class PrecisionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An operation was applied outside its mathematical domain
/// (non-unit inversion, f(0) != 0 under composition, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Malformed text or structured input.
class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

} // namespace phicoord
