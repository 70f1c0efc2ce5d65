#pragma once

#include <stdexcept>
#include <string>

namespace jsk {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Two objects live over different variable families or different n.
struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& what) : Error(what) {}
};

// Malformed polynomial / operator text.  Positions are 1-based.
struct ParseError : Error {
    ParseError(const std::string& what, int line, int column)
        : Error(what + " (line " + std::to_string(line) + ", column " +
                std::to_string(column) + ")"),
          line(line),
          column(column) {}
    int line;
    int column;
};

// Structure constants that fail antisymmetry or the Jacobi identity.
struct JacobiError : Error {
    explicit JacobiError(const std::string& what) : Error(what) {}
};

// Division by a zero polynomial / rational function, singular matrix, ...
struct SingularError : Error {
    explicit SingularError(const std::string& what) : Error(what) {}
};

// Bad user input that is not a syntax error: unknown scenario name,
// out-of-range parameter, missing companion file, ...
struct UsageError : Error {
    explicit UsageError(const std::string& what) : Error(what) {}
};

}  // namespace jsk
