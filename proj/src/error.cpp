#include "einf/error.hpp"

namespace einf {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::not_surjective: return "NotSurjective";
    case ErrorCode::degenerate: return "Degenerate";
    case ErrorCode::out_of_range: return "OutOfRange";
    case ErrorCode::no_such_occurrence: return "NoSuchOccurrence";
    case ErrorCode::arity_mismatch: return "ArityMismatch";
    case ErrorCode::index_out_of_range: return "IndexOutOfRange";
    case ErrorCode::coord_out_of_range: return "CoordOutOfRange";
    case ErrorCode::path_invalid: return "PathInvalid";
    case ErrorCode::factor_is_point: return "FactorIsPoint";
    case ErrorCode::degree_mismatch: return "DegreeMismatch";
    case ErrorCode::resource_exceeded: return "ResourceExceeded";
    case ErrorCode::unknown_suite: return "UnknownSuite";
    case ErrorCode::parse_error: return "ParseError";
  }
  return "Unknown";
}

}  // namespace einf
