#pragma once

#include <stdexcept>
#include <string>

namespace chainloop {

// Failure taxonomy shared by the library and the CLI. The exit_code is what
// the command-line tool returns when the error escapes to main.
class Error : public std::runtime_error {
public:
    Error(std::string message, int exit_code)
        : std::runtime_error(std::move(message)), exit_code_(exit_code) {}

    int exit_code() const noexcept { return exit_code_; }

private:
    int exit_code_;
};

// Malformed or out-of-domain input: bad JSON, an invalid tableau,
// nonpositive edge lengths, a distance that is not a multiple of m_i.
class ValidationError : public Error {
public:
    explicit ValidationError(std::string message)
        : Error(std::move(message), 1) {}
};

// Dimension or genus disagreement between otherwise valid objects.
class ShapeError : public Error {
public:
    explicit ShapeError(std::string message) : Error(std::move(message), 2) {}
};

// The operation needs a generic graph and the given one is not.
class NonGenericError : public Error {
public:
    explicit NonGenericError(std::string message)
        : Error(std::move(message), 3) {}
};

// A guarantee that should hold by construction failed. Signals a bug, or an
// input outside the documented domain of a fail-loud operation.
class InvariantError : public Error {
public:
    explicit InvariantError(std::string message)
        : Error(std::move(message), 4) {}
};

}  // namespace chainloop
