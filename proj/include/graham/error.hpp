#pragma once

#include <stdexcept>
#include <string>

namespace graham {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of an operation (x < 2, m < 2, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// A stated operation precondition does not hold (combine/strip preconditions).
class PreconditionViolated : public Error {
 public:
  using Error::Error;
};

// A bounded search ran past its cap; signals a bug or a too-small cap.
class SearchCapExceeded : public Error {
 public:
  using Error::Error;
};

// No sequence exists within the searched range (reverse search bottomed out).
class NoSequence : public Error {
 public:
  using Error::Error;
};

// Input falls in a case a constructive bound does not cover.
class UnsupportedCase : public Error {
 public:
  using Error::Error;
};

// Text input line that does not match the expected format.
class MalformedLine : public Error {
 public:
  MalformedLine(int line_number, const std::string& what)
      : Error("line " + std::to_string(line_number) + ": " + what),
        line_number_(line_number) {}
  int line_number() const { return line_number_; }

 private:
  int line_number_;
};

// Two records claim different results for the same key.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

// Filesystem or network failure.
class IoFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace graham
