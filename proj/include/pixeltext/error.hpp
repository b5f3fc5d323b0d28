#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pixeltext {

enum class ErrorKind {
  WordTooLong,
  MalformedRow,
  LabelOutOfRange,
  ShapeMismatch,
  SequenceTooShort,
  ConfigMismatch,
  EmptySplit,
  TooShort,
  IoFailure,
  BadMagic,
  VersionMismatch,
  CorruptLength,
  Usage,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::WordTooLong: return "WordTooLong";
    case ErrorKind::MalformedRow: return "MalformedRow";
    case ErrorKind::LabelOutOfRange: return "LabelOutOfRange";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::SequenceTooShort: return "SequenceTooShort";
    case ErrorKind::ConfigMismatch: return "ConfigMismatch";
    case ErrorKind::EmptySplit: return "EmptySplit";
    case ErrorKind::TooShort: return "TooShort";
    case ErrorKind::IoFailure: return "IoFailure";
    case ErrorKind::BadMagic: return "BadMagic";
    case ErrorKind::VersionMismatch: return "VersionMismatch";
    case ErrorKind::CorruptLength: return "CorruptLength";
    case ErrorKind::Usage: return "Usage";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the kinds above so
/// that callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace pixeltext
