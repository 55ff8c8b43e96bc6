#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace invq {

// Stable error codes, mirrored one-to-one by the C API status values.
enum class ErrorCode : int32_t {
  Ok = 0,
  BadArgument = 1,
  NonCoprime = 2,
  ParseError = 3,
  ValidationError = 4,
  IncompleteFactorization = 5,
  InsufficientRank = 6,
  SingularSystem = 7,
  SpanFailure = 8,
  NotFound = 9,
  IoError = 10,
  Internal = 11,
};

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, std::string msg)
      : std::runtime_error(std::move(msg)), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

class NonCoprimeError : public Error {
public:
  explicit NonCoprimeError(std::string msg)
      : Error(ErrorCode::NonCoprime, std::move(msg)) {}
};

class ParseError : public Error {
public:
  explicit ParseError(std::string msg)
      : Error(ErrorCode::ParseError, std::move(msg)) {}
};

// A candidate search exhausted its range without reaching full GF(2) rank.
// Carries the rank actually achieved for diagnostics.
class InsufficientRankError : public Error {
public:
  InsufficientRankError(std::string msg, unsigned rank_achieved)
      : Error(ErrorCode::InsufficientRank, std::move(msg)),
        rank_achieved_(rank_achieved) {}
  unsigned rank_achieved() const noexcept { return rank_achieved_; }

private:
  unsigned rank_achieved_;
};

[[noreturn]] inline void throw_bad_argument(const std::string& msg) {
  throw Error(ErrorCode::BadArgument, msg);
}

}  // namespace invq
