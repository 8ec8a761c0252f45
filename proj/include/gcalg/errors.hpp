#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gcalg {

enum class GraphErrorKind {
    dangling_endpoint,
    duplicate_id,
    zero_multiplicity,
};

// Raised by graph validation.
class GraphError : public std::runtime_error {
public:
    GraphError(GraphErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    GraphErrorKind kind() const noexcept { return kind_; }

private:
    GraphErrorKind kind_;
};

// Malformed graph JSON. line and column are 1-based; 0 when unknown.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t line = 0, std::size_t column = 0)
        : std::runtime_error(message), line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

// An operation was called outside its domain (set not invariant, vertex not
// singular, path space infinite, ...).
class PreconditionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An enumeration would exceed a configured bound. `flag` names the CLI flag
// that raises the bound.
class BoundExceeded : public std::runtime_error {
public:
    BoundExceeded(const std::string& message, std::string flag)
        : std::runtime_error(message), flag_(std::move(flag)) {}

    const std::string& flag() const noexcept { return flag_; }

private:
    std::string flag_;
};

} // namespace gcalg
