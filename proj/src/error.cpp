#include "delpezzo/error.hpp"

namespace delpezzo {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::NotARoot: return "NotARoot";
    case ErrorKind::NotIsometry: return "NotIsometry";
    case ErrorKind::NotInSpace: return "NotInSpace";
    case ErrorKind::DegenerateForm: return "DegenerateForm";
    case ErrorKind::BadVector: return "BadVector";
    case ErrorKind::WrongShape: return "WrongShape";
    case ErrorKind::NotClosed: return "NotClosed";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::NoPreimage: return "NoPreimage";
    case ErrorKind::BadInput: return "BadInput";
    case ErrorKind::WrongRange: return "WrongRange";
  }
  return "Unknown";
}

}  // namespace delpezzo
