#pragma once

#include <stdexcept>
#include <string>

namespace gqca {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class RankMismatch : public Error {
 public:
  using Error::Error;
};

class FormMismatch : public Error {
 public:
  using Error::Error;
};

class NotPointed : public Error {
 public:
  using Error::Error;
};

class DivisionNotExact : public Error {
 public:
  using Error::Error;
};

class NotCompatible : public Error {
 public:
  NotCompatible(int row, int col, const std::string& what)
      : Error(what), row_(row), col_(col) {}
  // 1-based offending entry of Lambda^T * B.
  int row() const { return row_; }
  int col() const { return col_; }

 private:
  int row_;
  int col_;
};

class InvalidSeed : public Error {
 public:
  using Error::Error;
};

class NotInSpan : public Error {
 public:
  using Error::Error;
};

class LimitExceeded : public Error {
 public:
  using Error::Error;
};

// An identity that must hold by construction failed; indicates a bug.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& what)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace gqca
