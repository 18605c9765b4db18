#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace golomb {

enum class ErrorCode {
  Overflow,
  EmptyFactorList,
  NonDividingChain,
  SizeCap,
  ParentMismatch,
  NotCoprime,
  NoSolution,
  RankMismatch,
  ZeroSubmodule,
  NotProper,
  NotARefutation,
  NotABasis,
  OpenSetCap,
  ParseError,
  InvalidArgument,
};

inline std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries a machine-readable code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

  /// Resource caps (enumeration bound, open-set bound) as opposed to bad input.
  bool is_resource_cap() const noexcept {
    return code_ == ErrorCode::SizeCap || code_ == ErrorCode::OpenSetCap;
  }

 private:
  ErrorCode code_;
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::EmptyFactorList: return "EmptyFactorList";
    case ErrorCode::NonDividingChain: return "NonDividingChain";
    case ErrorCode::SizeCap: return "SizeCap";
    case ErrorCode::ParentMismatch: return "ParentMismatch";
    case ErrorCode::NotCoprime: return "NotCoprime";
    case ErrorCode::NoSolution: return "NoSolution";
    case ErrorCode::RankMismatch: return "RankMismatch";
    case ErrorCode::ZeroSubmodule: return "ZeroSubmodule";
    case ErrorCode::NotProper: return "NotProper";
    case ErrorCode::NotARefutation: return "NotARefutation";
    case ErrorCode::NotABasis: return "NotABasis";
    case ErrorCode::OpenSetCap: return "OpenSetCap";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace golomb
