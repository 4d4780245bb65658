#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace signlab {

enum class ErrorCode {
  kInvalidArgument,
  kArityMismatch,
  kOutOfRange,
  kParse,
  kZeroFunction,
  kNotALowerBound,
  kInvalidWitness,
  kTrivialCase,
  kZeroCertificate,
  kDegenerateCertificate,
  kNonSymmetric,
  kNonConvergence,
  kInternal,
  kCancelled,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Parse failures additionally record the offending character offset.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& what)
      : Error(ErrorCode::kParse, what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace signlab
