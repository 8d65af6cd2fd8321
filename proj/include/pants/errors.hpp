#pragma once

#include <stdexcept>
#include <string>

namespace pants {

// Base class for every error thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Word grammar violations (illegal character, unbalanced parenthesis,
// bad exponent).
struct SyntaxError : Error {
  using Error::Error;
};

// The word reduces to the empty cyclic word; no curve class exists for it.
struct TrivialClassError : Error {
  using Error::Error;
};

// An enumeration or expansion would exceed a configured size cap.
struct ResourceLimitError : Error {
  using Error::Error;
};

// |trace| < 2 for a non-identity matrix: impossible in a free discrete
// group, so this always signals a representation bug.
struct EllipticElementError : Error {
  using Error::Error;
};

// Axis requested for a non-hyperbolic element.
struct NotHyperbolicError : Error {
  using Error::Error;
};

// Two geodesics handed to the crossing predicate share an endpoint; the
// caller should have filtered parallel lifts out.
struct SharedEndpointError : Error {
  using Error::Error;
};

// Double-coset count still changing at the maximum enumeration radius.
struct NotConvergedError : Error {
  using Error::Error;
};

// Ordered self-crossing coset count came out odd.
struct OddCountError : Error {
  using Error::Error;
};

// The generator matrices disagree with the boundary-parallel word set.
struct RepresentationError : Error {
  using Error::Error;
};

// The census length cap could not be validated by the sweep.
struct CapUnverifiedError : Error {
  using Error::Error;
};

}  // namespace pants
