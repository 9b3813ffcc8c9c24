#pragma once

#include <stdexcept>
#include <string>

namespace listaccess {

// Base of every error raised by the library. Callers that only need to report
// a failure can catch this; the subclasses exist for tests and exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SymbolNotInList : public Error {
 public:
  using Error::Error;
};

class PositionOutOfRange : public Error {
 public:
  using Error::Error;
};

class DuplicateSymbol : public Error {
 public:
  using Error::Error;
};

class EmptyList : public Error {
 public:
  using Error::Error;
};

class EmptySequence : public Error {
 public:
  using Error::Error;
};

class InstanceTooLarge : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

class EmptyInput : public Error {
 public:
  using Error::Error;
};

class InvalidSpec : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace listaccess
