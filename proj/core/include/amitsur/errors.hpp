#pragma once

#include <stdexcept>
#include <string>

namespace amitsur {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad argument supplied by the caller (out of range, wrong shape, not prime, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Two operands live over cyclic groups of different orders.
class OrderMismatch : public Error {
 public:
  OrderMismatch(std::size_t lhs, std::size_t rhs)
      : Error("group order mismatch: " + std::to_string(lhs) + " vs " + std::to_string(rhs)) {}
};

class NotInvertible : public Error {
 public:
  using Error::Error;
};

// A computation produced a value that the mathematics says is impossible.
class InternalConsistency : public Error {
 public:
  using Error::Error;
};

class SearchSpaceTooLarge : public Error {
 public:
  using Error::Error;
};

// No τ-fixed unit with the requested residue was reached by the generator search.
class NotCovered : public Error {
 public:
  using Error::Error;
};

// Composition of norm-set maps whose exponents do not line up.
class ExponentMismatch : public Error {
 public:
  using Error::Error;
};

class CocycleError : public Error {
 public:
  using Error::Error;
};

// A 1-chain z with δz != c was handed to the ideal construction.
class NonSplittingChain : public Error {
 public:
  using Error::Error;
};

// A left ideal whose complement condition I + E = A fails.
class NotInOpenSubset : public Error {
 public:
  using Error::Error;
};

class FixtureError : public Error {
 public:
  using Error::Error;
};

}  // namespace amitsur
