#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace illum {

/// Formula text could not be parsed. `position` is the 0-based offset of the
/// offending character in the input string.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t position)
        : std::runtime_error(message + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Evaluation hit a point outside the expression's domain (division by zero).
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A query violates its contract (point on the graph, wrong input class).
class QueryError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An internal certificate failed; indicates a bug or a degenerate input the
/// algorithms refuse to guess about.
class InternalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace illum
