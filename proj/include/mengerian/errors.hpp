#pragma once

#include <stdexcept>

namespace mengerian {

/// Malformed textual input (edge lists, graph6, clutter text, JSON reports).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A configured cap (vertices, hyperedges, power, enumeration budget) was hit.
/// Results are never approximated when this is thrown.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace mengerian
