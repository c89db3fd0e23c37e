#pragma once

#include <stdexcept>
#include <string>

namespace hhnum {

// Root of every error the library raises. Callers that only need to tell
// "bad input" from "bug" can catch Error and InternalInvariantError.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Self-loops, out-of-range endpoints, malformed permutations.
class InvalidGraphError : public Error {
 public:
  using Error::Error;
};

// graph6 / edge-list decoding failures.
class ParseError : public Error {
 public:
  using Error::Error;
};

// An operation was called outside its domain: disconnected input, size
// mismatch, non-tree where a tree is required, enumeration cap exceeded.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A structural guarantee of the construction was violated. Always a bug.
class InternalInvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace hhnum
