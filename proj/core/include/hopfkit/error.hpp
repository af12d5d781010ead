#pragma once

#include <stdexcept>
#include <string>

namespace hopfkit {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class FieldMismatch : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// The requested root of unity does not exist in the chosen field.
class UnsupportedRoot : public Error {
 public:
  using Error::Error;
};

/// A cocycle value outside the roots of unity reached the coboundary solver.
class Unsupported : public Error {
 public:
  using Error::Error;
};

class InvalidCocycle : public Error {
 public:
  using Error::Error;
};

class CompatibilityError : public Error {
 public:
  using Error::Error;
};

class NotProjectiveRep : public Error {
 public:
  using Error::Error;
};

class AxiomFailure : public Error {
 public:
  using Error::Error;
};

class ResourceGuard : public Error {
 public:
  using Error::Error;
};

/// Outcome of an exhaustive check; `witness` names the first violation.
struct Report {
  bool ok = true;
  std::string witness;

  static Report pass() { return {}; }
  static Report fail(std::string why) { return {false, std::move(why)}; }
  explicit operator bool() const { return ok; }
};

}  // namespace hopfkit
