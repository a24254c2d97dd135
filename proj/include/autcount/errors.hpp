#pragma once

#include <stdexcept>
#include <string>

namespace autcount {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad arguments: non-prime characteristic, reducible modulus, out-of-range n, ...
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Operands built over different fields.
class FieldMismatch : public Error {
 public:
  FieldMismatch() : Error("operands belong to different fields") {}
};

// Dirichlet series with different truncation horizons.
class HorizonMismatch : public Error {
 public:
  HorizonMismatch() : Error("series have different truncation horizons") {}
};

// Raised by decompose() when no reduction step applies. `step()` is the
// index of the reduction step that failed (0-based).
class NotAutomorphism : public Error {
 public:
  NotAutomorphism(int step, const std::string& why)
      : Error("not an automorphism (reduction step " + std::to_string(step) + "): " + why), step_(step) {}
  int step() const noexcept { return step_; }

 private:
  int step_;
};

// An enumeration would exceed its feasibility ceiling.
class CeilingExceeded : public Error {
 public:
  using Error::Error;
};

// Internal consistency check failed (e.g. inexact division in a count that
// the theory guarantees to be exact, or an oracle assertion).
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace autcount
