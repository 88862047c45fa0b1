#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace toric {

/// Input outside an operation's mathematical domain (zero vector, det != +-1, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A vertex list that does not describe a Delzant polygon.
class ValidationError : public std::invalid_argument {
 public:
  ValidationError(const std::string& what, std::size_t vertex)
      : std::invalid_argument(what + " (vertex " + std::to_string(vertex) + ")"),
        vertex_(vertex) {}

  std::size_t vertex() const noexcept { return vertex_; }

 private:
  std::size_t vertex_;
};

/// An edge profile that fails monodromy, closure, or positivity.
class InvalidProfile : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A corner chop requested at a vertex with an incident edge of size <= epsilon.
class FeasibilityError : public std::invalid_argument {
 public:
  FeasibilityError(const std::string& what, std::size_t edge)
      : std::invalid_argument(what), edge_(edge) {}

  /// Index of the blocking edge in the pre-chop polygon.
  std::size_t edge() const noexcept { return edge_; }

 private:
  std::size_t edge_;
};

/// An operation was called on an argument violating its precondition
/// (for instance a non-reduced blowup vector).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Cremona reduction produced a non-positive entry: the vector does not
/// encode the class of a blowup form.
class NotBlowupClass : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Post-condition check failed. Indicates a bug, never bad input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Malformed textual input; `position` is a 0-based character offset.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace toric
