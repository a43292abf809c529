#pragma once

#include <stdexcept>
#include <string>

namespace graphcat {

/// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A construction would exceed a configured size bound (power sets,
/// function spaces, hom enumerations).  The message names the bound.
struct BoundError : Error {
    explicit BoundError(const std::string& what) : Error(what) {}
};

/// A structural invariant was violated (non-commuting square, atom
/// outside its carrier, mismatched domains, ...).
struct ValidationError : Error {
    explicit ValidationError(const std::string& what) : Error(what) {}
};

/// Malformed text while parsing atoms or interchange documents.
struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error(what) {}
};

} // namespace graphcat
