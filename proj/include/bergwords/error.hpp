#pragma once

#include <stdexcept>
#include <string>

namespace bergwords {

enum class Errc {
  DivisionByZero,
  MixedRadicands,
  NegativeEntry,
  NotUnimodular,
  NotHyperbolic,
  SingularBasis,
  ZeroDirection,
  OutOfSpine,
  RangeTooSmall,
  NotPalindromic,
  ContentMismatch,
  ReversalMismatch,
  IdentityFailed,
  UnsupportedOption,
};

const char* errc_name(Errc c);

// Domain error carrying one of the named condition codes above.  The CLI maps
// these to exit code 1 and prints the code name.
class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& detail)
      : std::runtime_error(std::string(errc_name(code)) + ": " + detail), code_(code) {}

  Errc code() const noexcept { return code_; }
  const char* name() const noexcept { return errc_name(code_); }

private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& detail) {
  throw Error(code, detail);
}

} // namespace bergwords
