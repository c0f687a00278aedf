#pragma once

#include <stdexcept>
#include <string>

namespace lt {

enum class ErrorKind {
  invalid_parameter,
  pole,
  domain,
  not_applicable,
  degenerate,
  not_on_boundary,
  classification,
  cut,
  convergence,
  ill_conditioned,
  under_resolved,
  construction,
};

const char* to_string(ErrorKind kind) noexcept;

/// Single exception type for the library; callers dispatch on kind().
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  /// Pole errors carry the offending location.
  Error(ErrorKind kind, const std::string& what, double location)
      : std::runtime_error(what), kind_(kind), location_(location),
        has_location_(true) {}

  ErrorKind kind() const noexcept { return kind_; }
  bool has_location() const noexcept { return has_location_; }
  double location() const noexcept { return location_; }

 private:
  ErrorKind kind_;
  double location_ = 0.0;
  bool has_location_ = false;
};

}  // namespace lt
