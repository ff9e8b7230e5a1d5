#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mengerian {

/// Bad argument: unknown vertex, empty set, self-loop, non-adjacent pair.
class ArgumentError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A temporal walk failed endpoint or monotonicity checks at `index`.
class ValidationError : public std::invalid_argument {
public:
    ValidationError(std::size_t index, const std::string& what)
        : std::invalid_argument(what + " (at step " + std::to_string(index) + ")"), index_(index) {}

    std::size_t index() const noexcept { return index_; }

private:
    std::size_t index_;
};

/// The requested quantity is undefined, e.g. a vertex cut between adjacent vertices.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// An exact oracle's size guard was exceeded.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A caller-guaranteed precondition does not hold.
class ContractError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Structural condition of an F1/F2 assembly violated.
class AssemblyError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Malformed graph file; `line()` is 1-based.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

}  // namespace mengerian
