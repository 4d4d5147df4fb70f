#pragma once

#include <stdexcept>
#include <string>

namespace realspec {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operands live in different value groups or ambient rings.
class RankMismatch : public Error {
 public:
  using Error::Error;
};

// The answer depends on terms discarded by a truncation.
class Undecidable : public Error {
 public:
  using Error::Error;
};

// Input violates an operation's documented precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A mathematical claim checked by the library failed on the supplied data.
// Surfaced, never repaired.
class Violation : public Error {
 public:
  using Error::Error;
};

// A bounded search ran out of room before reaching an answer known to exist.
class BoundExceeded : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace realspec
