#pragma once

#include <stdexcept>
#include <string>

namespace entbound {

/// Failure categories. The numeric values are shared with the C API and
/// the CLI exit-code contract.
enum class ErrorCode {
  InvalidArgument = 1,
  Parse = 2,
  Domain = 3,
  Io = 4,
  Numeric = 5,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace entbound
