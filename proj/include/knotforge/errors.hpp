#pragma once

#include <stdexcept>
#include <string>

namespace knotforge {

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Errors caused by bad user input (malformed codes, unknown names, missing
// files). The CLI maps these to exit code 2; everything else exits 1.
class InputError : public Error {
 public:
  using Error::Error;
};

class MalformedSyntax : public InputError {
 public:
  using InputError::InputError;
};

// An arc/crossing label is used an impossible number of times, or the
// incidence structure of a code cannot come from an oriented knot diagram.
class BadIncidence : public InputError {
 public:
  using InputError::InputError;
};

// The under-strand passages split into more than one cycle: the code
// describes a link, not a knot.
class DisconnectedUnderCycle : public InputError {
 public:
  using InputError::InputError;
};

// The O and U tokens of one crossing in a Gauss code disagree in sign.
class SignMismatch : public InputError {
 public:
  using InputError::InputError;
};

class UnknownKnotName : public InputError {
 public:
  using InputError::InputError;
};

class FileNotFound : public InputError {
 public:
  using InputError::InputError;
};

// Contract violations by callers (never reachable through the CLI).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class NoRelators : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

// Raised instead of wrapping around when 64-bit exact arithmetic overflows.
class ArithmeticOverflow : public Error {
 public:
  using Error::Error;
};

class InvalidChainComplex : public Error {
 public:
  using Error::Error;
};

}  // namespace knotforge
