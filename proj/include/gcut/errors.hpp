#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gcut {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An argument violates an operation's precondition (bad vertex id, empty
/// terminal set, invalid family parameter, ...).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// An exhaustive method was asked to run on a graph above its vertex ceiling.
class CeilingExceeded : public Error {
public:
    CeilingExceeded(std::size_t order, std::size_t ceiling)
        : Error("graph has " + std::to_string(order) +
                " vertices, above the brute-force ceiling of " + std::to_string(ceiling) +
                "; use the flow method instead"),
          order_(order), ceiling_(ceiling) {}

    std::size_t order() const noexcept { return order_; }
    std::size_t ceiling() const noexcept { return ceiling_; }

private:
    std::size_t order_;
    std::size_t ceiling_;
};

/// Malformed edge-list input. `line()` is 1-based.
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

}  // namespace gcut
