#ifndef MOMAP_ERRORS_HPP
#define MOMAP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace momap {

/// A constructed value violates one of its structural invariants
/// (non-unit observer velocity, asymmetric bivector, singular frame, ...).
struct InvariantViolation : std::runtime_error {
  explicit InvariantViolation(const std::string& what) : std::runtime_error(what) {}
};

/// Scene or constants file could not be parsed.
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Quadrature refinement disagreement exceeded the requested tolerance.
struct QuadratureError : std::runtime_error {
  explicit QuadratureError(const std::string& what) : std::runtime_error(what) {}
};

/// Total momentum is not timelike; rest-frame quantities are undefined.
struct NonTimelikeMomentum : std::runtime_error {
  explicit NonTimelikeMomentum(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace momap

#endif
