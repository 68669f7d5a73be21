#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace csq {

// Error classes surfaced by the library. The CLI maps ParseError to exit
// code 2 and everything else to exit code 1.
enum class Errc {
  UnsupportedRing,
  RingMismatch,
  DivisionByZero,
  ParseError,
  NotAUnit,
  LengthLimitExceeded,
  NoncommutativeRing,
  NotQuasiPalindromic,
  BothZero,
  NoSolution,
  NotRepresentable,
  PalindromeViolation,
  NotCoprime,
  PreconditionFailed,
  NotADivisor,
  BadField,
  DegreeError,
  UnitNotSumOfSquares,
  NoMultiplier,
  ChainStall,
  NonTermination,
  ReconstructionMismatch,
  InternalInvariant,
};

std::string_view errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& message)
      : Error(Errc::ParseError,
              "parse error at position " + std::to_string(position) + ": " + message),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// Throws InternalInvariant when an identity that must hold by construction
// fails. These are checks on our own results, not on caller input.
inline void ensure(bool condition, Errc code, const char* what) {
  if (!condition) throw Error(code, what);
}

}  // namespace csq
