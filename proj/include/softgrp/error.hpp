#pragma once

#include <stdexcept>
#include <string>

namespace softgrp {

enum class ErrorCode {
  InvalidArgument,
  Parse,
  DegreeMismatch,
  NotSubgroup,
  NotHomomorphism,
  DiagramViolation,
  NotComposable,
  ScaleBound,
  KernelUndefined,
  Internal,
};

const char* to_string(ErrorCode code) noexcept;

/// All library failures are reported as softgrp::Error; the code is what the
/// C API and the CLI exit status are derived from.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace softgrp
