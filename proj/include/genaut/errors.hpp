#pragma once

#include <stdexcept>

namespace genaut {

/// Base class for all toolkit errors. The CLI maps any genaut::Error to
/// exit status 2 (bad input/usage) and other exceptions to exit status 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Matrix or vector dimensions do not conform.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// Operands live in different semirings, or a value violates the
/// active semiring's domain (e.g. a Boolean entry outside {0,1}).
class AlgebraError : public Error {
 public:
  using Error::Error;
};

/// An argument is outside its documented range.
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// A word uses a symbol that is not in the automaton's alphabet, or an
/// alphabet is malformed (empty, duplicate symbols).
class AlphabetError : public Error {
 public:
  using Error::Error;
};

/// Two automata (or agents) cannot be compared: different alphabets,
/// state counts, or semirings.
class ComparabilityError : public Error {
 public:
  using Error::Error;
};

/// A run configuration is invalid (odd population, bad file, ...).
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace genaut
