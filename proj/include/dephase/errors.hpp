// errors.hpp: exception types shared across the library

#pragma once

#include <stdexcept>
#include <string>

namespace dephase {

// Argument outside the mathematical domain of an operation (index out of
// range, |c3| >= 1, non-normalized amplitudes, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// A request that the model cannot serve in the given geometry, e.g. the
// same-position limit asked for particles that start apart.
class ConfigurationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Bell-diagonal parameters that do not describe a positive density matrix.
class InvalidStateError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// X-state handed to a closed form that assumes maximally mixed marginals.
class UnsupportedStateError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A quantity that must be non-negative came out clearly negative.
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Config text that cannot be turned into a RunConfig. Carries the 1-based
// line number of the offending entry (0 when the problem is global).
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what)
        , line_(line) {}

    int line() const noexcept { return line_; }

private:
    int line_;
};

}  // namespace dephase
