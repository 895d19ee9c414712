#pragma once

#include <stdexcept>
#include <string>

namespace polyprod {

enum class ErrorCode {
  NotAFace,
  InvalidOrder,
  NotAShelling,
  NotApplicable,
  NotACycle,
  AmbientMismatch,
  ModelMismatch,
  GhostVertex,
  Unsupported,
  Parse,
  Internal,
};

const char* to_string(ErrorCode code);

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace polyprod
