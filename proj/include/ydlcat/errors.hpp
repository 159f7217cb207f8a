#pragma once

#include <stdexcept>
#include <string>

namespace ydlcat {

/// Root of every error thrown by the library. Anything deriving from it that
/// is not a ParseError is a semantic error from the CLI's point of view.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class FieldMismatch : public Error {
 public:
  using Error::Error;
};

class SingularMatrix : public Error {
 public:
  using Error::Error;
};

class AlgebraMismatch : public Error {
 public:
  using Error::Error;
};

class ComponentMismatch : public Error {
 public:
  using Error::Error;
};

class InvalidGroupTable : public Error {
 public:
  using Error::Error;
};

class InvalidAutomorphism : public Error {
 public:
  using Error::Error;
};

class InvalidQuadruple : public Error {
 public:
  using Error::Error;
};

class NotAMorphism : public Error {
 public:
  using Error::Error;
};

class UnsupportedField : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace ydlcat
