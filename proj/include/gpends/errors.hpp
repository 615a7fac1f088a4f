#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gpends {

/// Malformed input: unknown vertex, bad document, out-of-range parameter.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A label kind that an operation cannot interpret (e.g. an abstract
/// label handed to the Cayley oracle, or an infinite label handed to a
/// finite-vertex-group dictionary check).
class UnsupportedLabelError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A computation would exceed its configured element cap.
class ResourceError : public std::runtime_error {
 public:
  ResourceError(const std::string& what, int completed_radius)
      : std::runtime_error(what), completed_radius_(completed_radius) {}

  /// Largest radius whose ball was fully enumerated before the cap hit.
  int completed_radius() const noexcept { return completed_radius_; }

 private:
  int completed_radius_;
};

}  // namespace gpends
