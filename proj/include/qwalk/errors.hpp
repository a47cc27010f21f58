#pragma once

#include <stdexcept>
#include <string>

namespace qwalk {

// Bad caller input (negative step counts, non-finite angles, malformed flags).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The requested formula does not cover this coin (e.g. theta = pi/2 for the
// closed-form sums).
class FormulaDomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Floating-point cancellation left a result that cannot be a probability.
class PrecisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Work size beyond what a route supports (exact oracle table growth).
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  IoError(const std::string& path, const std::string& what)
      : std::runtime_error(path + ": " + what), path_(path) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

}  // namespace qwalk
