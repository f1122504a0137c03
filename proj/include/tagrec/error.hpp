#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tagrec {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad parameters supplied by a caller (k = 0, threshold out of range, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

// Malformed or out-of-range data.
class DataError : public Error {
 public:
  using Error::Error;
};

class InvalidAssignment : public DataError {
 public:
  InvalidAssignment(std::size_t position, const std::string& what)
      : DataError("assignment " + std::to_string(position) + ": " + what), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class EmptyCorpusError : public DataError {
 public:
  EmptyCorpusError() : DataError("corpus has no resources") {}
};

class NoAffinityError : public DataError {
 public:
  explicit NoAffinityError(const std::string& user)
      : DataError("user '" + user + "' has no tag assignments") {}
};

class SchemaError : public DataError {
 public:
  using DataError::DataError;
};

}  // namespace tagrec
