#pragma once

#include <stdexcept>
#include <string>

namespace coarselab {

// Base of every error raised by the library. `kind()` is a stable
// machine-readable tag that the CLI copies into its stderr JSON.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& message)
        : std::runtime_error(message), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

class InvalidArgument : public Error {
public:
    explicit InvalidArgument(const std::string& message) : Error("invalid_argument", message) {}
};

class CapExceeded : public Error {
public:
    explicit CapExceeded(const std::string& message) : Error("cap_exceeded", message) {}
};

class ParseError : public Error {
public:
    explicit ParseError(const std::string& message) : Error("parse_error", message) {}
};

class DisconnectedGraph : public Error {
public:
    DisconnectedGraph(int a, int b)
        : Error("disconnected_graph",
                "graph is disconnected: vertices " + std::to_string(a) + " and " +
                    std::to_string(b) + " are mutually unreachable"),
          first_(a), second_(b) {}

    int first() const noexcept { return first_; }
    int second() const noexcept { return second_; }

private:
    int first_;
    int second_;
};

// A constructed object failed one of the structural checks the algorithms
// rely on (for example overlapping supports in a composed map).
class InvariantViolation : public Error {
public:
    explicit InvariantViolation(const std::string& message) : Error("invariant_violation", message) {}
};

}  // namespace coarselab
