#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace eq5 {

enum class Errc {
  DivisionByZero,
  ParseError,
  NotUnit,
  CapExceeded,
  UnknownTag,
  BadParam,
  UnrecognizedGroup,
  NotNormal,
  NotSubgroup,
  SyntaxError,
  UnknownGenerator,
  InvalidParams,
  NoExceptionalOrbits,
  BadParams,
  UnclassifiedTarget,
  UnknownRow,
  DisallowedChain,
  NotCoprime,
  BadRegime,
};

constexpr std::string_view errc_name(Errc c) {
  switch (c) {
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::ParseError: return "ParseError";
    case Errc::NotUnit: return "NotUnit";
    case Errc::CapExceeded: return "CapExceeded";
    case Errc::UnknownTag: return "UnknownTag";
    case Errc::BadParam: return "BadParam";
    case Errc::UnrecognizedGroup: return "UnrecognizedGroup";
    case Errc::NotNormal: return "NotNormal";
    case Errc::NotSubgroup: return "NotSubgroup";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::UnknownGenerator: return "UnknownGenerator";
    case Errc::InvalidParams: return "InvalidParams";
    case Errc::NoExceptionalOrbits: return "NoExceptionalOrbits";
    case Errc::BadParams: return "BadParams";
    case Errc::UnclassifiedTarget: return "UnclassifiedTarget";
    case Errc::UnknownRow: return "UnknownRow";
    case Errc::DisallowedChain: return "DisallowedChain";
    case Errc::NotCoprime: return "NotCoprime";
    case Errc::BadRegime: return "BadRegime";
  }
  return "Unknown";
}

/// Single exception type for the library; `code()` tells callers which
/// contract was violated.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

/// Syntax error in a presentation or field-element string; carries the
/// 0-based offset of the offending character.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, const std::string& what)
      : Error(Errc::SyntaxError, what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace eq5
