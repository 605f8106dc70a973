#pragma once

#include <stdexcept>
#include <string>

namespace spherefp {

/// Malformed input text (point or weight files). Message names the line.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Geometric degeneracy (cocircular quadruples, coplanar input, ...).
class DegeneracyError : public std::runtime_error {
 public:
  explicit DegeneracyError(const std::string& what) : std::runtime_error(what) {}
};

/// Numerically undefined result (infinite energy or gradient from
/// coincident points, divergent regularization, ...).
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace spherefp
