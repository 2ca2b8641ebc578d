#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sbss {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input data that can never form a valid graph (bad endpoint, self-loop, bad bounds).
class InvalidInput : public Error {
public:
    using Error::Error;
};

/// A documented precondition of an operation does not hold for its arguments.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// An object was used with the wrong owner, e.g. an ArcSubset of another graph.
class ContractViolation : public Error {
public:
    using Error::Error;
};

/// The undirected view is disconnected where a connected one is required.
class DisconnectedGraph : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

/// The exact search refuses instances above its configured arc cap.
class CapExceeded : public Error {
public:
    CapExceeded(std::size_t size, std::size_t cap)
        : Error("instance too large for exact solver: " + std::to_string(size) + " > cap " +
                std::to_string(cap)),
          size_(size),
          cap_(cap) {}

    std::size_t size() const noexcept { return size_; }
    std::size_t cap() const noexcept { return cap_; }

private:
    std::size_t size_;
    std::size_t cap_;
};

/// Malformed edge-list text. `line()` is 1-based.
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

}  // namespace sbss
