#pragma once

#include <stdexcept>
#include <string>

namespace delpezzo {

enum class ErrorKind {
  OutOfRange,
  LengthMismatch,
  NotARoot,
  NotIsometry,
  NotInSpace,
  DegenerateForm,
  BadVector,
  WrongShape,
  NotClosed,
  DegreeMismatch,
  NoPreimage,
  BadInput,
  WrongRange,
};

const char* to_string(ErrorKind kind);

/// Single exception type for the library; callers dispatch on kind().
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace delpezzo
