#ifndef KEMETRIC_ERRORS_HPP
#define KEMETRIC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace kemetric
{

// Caller supplied incompatible arguments (dimension/truncation mismatch,
// index out of range, wrong kind of input for an operation).
class UsageError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

// A mathematical precondition failed (non-unit constant term, zero divisor,
// degenerate metric at the center).
class DomainError : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

// Malformed potential specification (duplicate support monomial, bad degree).
class SpecError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

// Malformed textual input.
class ParseError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// Internal consistency check failed; indicates a bug in the engine.
class EngineError : public std::logic_error
{
public:
    using std::logic_error::logic_error;
};

} // namespace kemetric

#endif
