#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace endogrowth {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Shape mismatch in matrix / polynomial arithmetic.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Unknown or malformed generator name.
class NameError : public Error {
 public:
  using Error::Error;
};

/// Bad parameters, malformed input files, invalid endomorphisms.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Operation applied with data belonging to a different machine or family.
class FamilyError : public Error {
 public:
  using Error::Error;
};

/// Endomorphism does not fit any of the admissible shapes for a family.
class ClassificationError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// A stored-element or word-size budget was exhausted.
class ResourceError : public Error {
 public:
  ResourceError(const std::string& what, std::size_t completed_radius,
                std::size_t elements)
      : Error(what), completed_radius_(completed_radius), elements_(elements) {}

  std::size_t completed_radius() const noexcept { return completed_radius_; }
  std::size_t elements() const noexcept { return elements_; }

 private:
  std::size_t completed_radius_;
  std::size_t elements_;
};

/// A numeric result could not be certified within the requested tolerance.
class UncertifiedError : public Error {
 public:
  using Error::Error;
};

/// A mathematical invariant that must hold for valid inputs failed.
class InvariantError : public Error {
 public:
  using Error::Error;
};

}  // namespace endogrowth
