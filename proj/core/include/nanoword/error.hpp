#pragma once

#include <stdexcept>
#include <string>

namespace nanoword {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Violation of a mathematical precondition (bad alphabet data, invalid
/// projection, undefined operation, ...).
struct DomainError : Error {
    using Error::Error;
};

/// A move was requested at a locus where its pattern or side condition
/// does not hold.
struct MoveError : Error {
    using Error::Error;
};

/// Syntax or semantic error in a phrase document, with source location.
struct ParseError : Error {
    ParseError(const std::string& what, int line, int col)
        : Error(what + " (line " + std::to_string(line) + ", col " +
                std::to_string(col) + ")"),
          line(line),
          col(col) {}
    int line;
    int col;
};

}  // namespace nanoword
