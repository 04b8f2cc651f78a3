#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace einf {

enum class ErrorCode {
  not_surjective,
  degenerate,
  out_of_range,
  no_such_occurrence,
  arity_mismatch,
  index_out_of_range,
  coord_out_of_range,
  path_invalid,
  factor_is_point,
  degree_mismatch,
  resource_exceeded,
  unknown_suite,
  parse_error,
};

std::string_view to_string(ErrorCode code);

// Thrown by every checked operation in the library. `code` is the stable
// machine-readable part; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// ParseError carries the 0-based character offset where decoding stopped.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& what)
      : Error(ErrorCode::parse_error,
              "at position " + std::to_string(position) + ": " + what),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace einf
