#include "signlab/error.hpp"

namespace signlab {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "INVALID_ARGUMENT";
    case ErrorCode::kArityMismatch: return "ARITY_MISMATCH";
    case ErrorCode::kOutOfRange: return "OUT_OF_RANGE";
    case ErrorCode::kParse: return "PARSE_ERROR";
    case ErrorCode::kZeroFunction: return "ZERO_FUNCTION";
    case ErrorCode::kNotALowerBound: return "NOT_A_LOWER_BOUND";
    case ErrorCode::kInvalidWitness: return "INVALID_WITNESS";
    case ErrorCode::kTrivialCase: return "TRIVIAL_CASE";
    case ErrorCode::kZeroCertificate: return "ZERO_CERTIFICATE";
    case ErrorCode::kDegenerateCertificate: return "DEGENERATE_CERTIFICATE";
    case ErrorCode::kNonSymmetric: return "NON_SYMMETRIC";
    case ErrorCode::kNonConvergence: return "NON_CONVERGENCE";
    case ErrorCode::kInternal: return "INTERNAL";
    case ErrorCode::kCancelled: return "CANCELLED";
  }
  return "UNKNOWN";
}

}  // namespace signlab
