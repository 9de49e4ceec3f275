#pragma once

#include <stdexcept>
#include <string>

namespace graphzeta {

/// Input document could not be parsed or fails validation.
class ParseError : public std::runtime_error {
public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// An enumeration was refused because its candidate space exceeds the
/// configured budget.  Callers may retry with a larger budget.
class ResourceLimitError : public std::runtime_error {
public:
  explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

/// The requested combination of scheme and mode is mathematically undefined
/// (e.g. a reduced-path transfer matrix for a scheme that is not of reduced
/// adjacency type).
class RejectedCombinationError : public std::runtime_error {
public:
  explicit RejectedCombinationError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace graphzeta
