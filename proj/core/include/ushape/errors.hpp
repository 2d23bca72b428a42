#pragma once

#include <stdexcept>
#include <string>

namespace ushape {

// Base of every error thrown by the library. Callers that only care about
// "something in ushape failed" catch this; the subclasses name the contract
// that was violated.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An argument lies outside the mathematical domain of an operation
// (non-positive radicand, family parameter failing its sieve, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

class DegenerateLattice : public Error {
 public:
  using Error::Error;
};

class NotReduced : public Error {
 public:
  using Error::Error;
};

// The three log coordinates of a supposed unit do not sum to zero.
class NotAUnit : public Error {
 public:
  using Error::Error;
};

class ExcludedCase : public Error {
 public:
  using Error::Error;
};

class InsufficientSamples : public Error {
 public:
  using Error::Error;
};

class MixedSubfields : public Error {
 public:
  using Error::Error;
};

class MalformedInput : public Error {
 public:
  using Error::Error;
};

class WrongSignature : public Error {
 public:
  using Error::Error;
};

class EmptyPlot : public Error {
 public:
  using Error::Error;
};

// An identity that holds by construction failed numerically; indicates a bug
// or exhausted precision rather than bad input.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace ushape
