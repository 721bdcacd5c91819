#ifndef STOPLAT_ERRORS_HPP
#define STOPLAT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace stoplat {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BoundsError : Error {
  using Error::Error;
};

// A generating pair set whose closure would need x < x.
struct CycleError : Error {
  using Error::Error;
};

struct SizeMismatch : Error {
  using Error::Error;
};

struct NotALattice : Error {
  using Error::Error;
};

struct NotAMember : Error {
  using Error::Error;
};

// Two elements of the ground set are never separated by the family.
struct NotAntisymmetric : Error {
  using Error::Error;
};

struct MissingBounds : Error {
  using Error::Error;
};

struct BaseMismatch : Error {
  using Error::Error;
};

struct NonTerminating : Error {
  using Error::Error;
};

struct NotIdempotent : Error {
  using Error::Error;
};

struct AxiomViolation : Error {
  using Error::Error;
};

struct NotAnExtension : Error {
  using Error::Error;
};

struct NotAnIdeal : Error {
  using Error::Error;
};

struct NotIncreasing : Error {
  using Error::Error;
};

struct LimitExceeded : Error {
  using Error::Error;
};

struct Overflow : Error {
  using Error::Error;
};

// Malformed input file or stream.
struct ParseError : Error {
  using Error::Error;
};

}  // namespace stoplat

#endif
