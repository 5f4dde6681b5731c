#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace prym {

enum class ErrorKind {
  InvalidGraph,       // schema-level: unknown endpoint, duplicate id
  NotStable,          // disconnected, unstable vertex or total genus < 2
  NotEulerian,
  CapExceeded,
  BadT,
  TooManyComponents,
  HypothesisNotMet,
  Disconnected,       // cover would be disconnected (trivial eta)
  SplitInvalid,
  SpaceTooLarge,
  Overflow,
  Parse,
  Io,
};

constexpr std::string_view kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::InvalidGraph: return "InvalidGraph";
    case ErrorKind::NotStable: return "NotStable";
    case ErrorKind::NotEulerian: return "NotEulerian";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::BadT: return "BadT";
    case ErrorKind::TooManyComponents: return "TooManyComponents";
    case ErrorKind::HypothesisNotMet: return "HypothesisNotMet";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::SplitInvalid: return "SplitInvalid";
    case ErrorKind::SpaceTooLarge: return "SpaceTooLarge";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::Io: return "Io";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(kind_name(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace prym
