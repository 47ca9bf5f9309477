#pragma once

#include <stdexcept>
#include <string>

namespace k3fm {

/// Root of the library's error hierarchy. The CLI maps these onto its exit
/// codes; the library itself only distinguishes the failure kinds.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Two classes from different PicardLattice instances were combined.
struct LatticeMismatchError : Error {
  using Error::Error;
};

/// A Gram matrix fails the lattice invariants (symmetry, evenness, signature).
struct LatticeError : Error {
  using Error::Error;
};

/// A quadratic form fails a definiteness requirement (e.g. the orthogonal
/// complement of the polarization is not negative definite).
struct SignatureError : Error {
  using Error::Error;
};

/// Surface data does not satisfy the reflexive relations.
struct NotReflexiveError : Error {
  using Error::Error;
};

/// A cup product outside the modeled block algebra was requested (ι ∪ ι).
struct UnsupportedProductError : Error {
  using Error::Error;
};

/// An operation was called outside its stated precondition.
struct PreconditionError : Error {
  using Error::Error;
};

/// Structured-text input could not be parsed; message carries file:line.
struct ParseError : Error {
  using Error::Error;
};

/// An internal invariant was violated (e.g. a push-forward produced a
/// non-integral class). Always a bug, never a user error.
struct InternalError : Error {
  using Error::Error;
};

}  // namespace k3fm
