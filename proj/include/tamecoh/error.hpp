#pragma once

#include <stdexcept>
#include <string>

namespace tamecoh {

enum class ErrorKind {
  InvalidInput,    // bad parameters or violated preconditions
  Io,              // file system failures
  OracleMismatch,  // two independent computations disagree
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class InputError : public Error {
 public:
  explicit InputError(const std::string& what)
      : Error(ErrorKind::InvalidInput, what) {}
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& what) : Error(ErrorKind::Io, what) {}
};

class OracleMismatch : public Error {
 public:
  explicit OracleMismatch(const std::string& what)
      : Error(ErrorKind::OracleMismatch, what) {}
};

}  // namespace tamecoh
