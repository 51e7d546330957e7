#pragma once

#include <stdexcept>
#include <string>

namespace nccr {

// Error kinds reported across the library. Cap/resource kinds map to a
// distinct process exit code in the CLI.
enum class Errc {
  UnknownVariable,
  SyntaxError,
  NonIntegerExponent,
  RingMismatch,
  NoGrading,
  NotAGroebnerBasis,
  NotHomogeneous,
  NotVanishingAtOrigin,
  NonIsolated,
  TooFewPositive,
  TooFewNegative,
  GcdNotOne,
  SumNotZero,
  TruncationTooLarge,
  TruncationInsufficient,
  CapExceeded,
  TooManyPoints,
  LatticeMismatch,
  NonIntegralResult,
  ZeroRank,
  NotAmple,
  NotNumericallyExceptional,
  Internal,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::UnknownVariable: return "UnknownVariable";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::NonIntegerExponent: return "NonIntegerExponent";
    case Errc::RingMismatch: return "RingMismatch";
    case Errc::NoGrading: return "NoGrading";
    case Errc::NotAGroebnerBasis: return "NotAGroebnerBasis";
    case Errc::NotHomogeneous: return "NotHomogeneous";
    case Errc::NotVanishingAtOrigin: return "NotVanishingAtOrigin";
    case Errc::NonIsolated: return "NonIsolated";
    case Errc::TooFewPositive: return "TooFewPositive";
    case Errc::TooFewNegative: return "TooFewNegative";
    case Errc::GcdNotOne: return "GcdNotOne";
    case Errc::SumNotZero: return "SumNotZero";
    case Errc::TruncationTooLarge: return "TruncationTooLarge";
    case Errc::TruncationInsufficient: return "TruncationInsufficient";
    case Errc::CapExceeded: return "CapExceeded";
    case Errc::TooManyPoints: return "TooManyPoints";
    case Errc::LatticeMismatch: return "LatticeMismatch";
    case Errc::NonIntegralResult: return "NonIntegralResult";
    case Errc::ZeroRank: return "ZeroRank";
    case Errc::NotAmple: return "NotAmple";
    case Errc::NotNumericallyExceptional: return "NotNumericallyExceptional";
    case Errc::Internal: return "Internal";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}
  Errc code() const { return code_; }
  const char* code_name() const { return errc_name(code_); }
  bool is_resource_error() const {
    return code_ == Errc::CapExceeded || code_ == Errc::TruncationTooLarge ||
           code_ == Errc::TruncationInsufficient;
  }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

}  // namespace nccr
