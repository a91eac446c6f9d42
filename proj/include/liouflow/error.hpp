// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace liouflow {

enum class ErrorKind {
  MalformedExpr,
  Indeterminate,
  PrecisionExhausted,
  ResourceLimit,
  StageUnavailable,
  DivisionByNearZero,
  DegenerateFrequency,
  EmptyWindow,
  WitnessFailed,
  PhaseUnreachable,
  TargetUnreachable,
  DensityFailed,
  NotApplicable,
  InvalidInput,
  ConfigError,
};

std::string_view to_string(ErrorKind kind);

// Every failure raised by the library carries a kind so callers (and the CLI
// exit-code mapping) can dispatch without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MalformedExpr: return "MalformedExpr";
    case ErrorKind::Indeterminate: return "Indeterminate";
    case ErrorKind::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorKind::ResourceLimit: return "ResourceLimit";
    case ErrorKind::StageUnavailable: return "StageUnavailable";
    case ErrorKind::DivisionByNearZero: return "DivisionByNearZero";
    case ErrorKind::DegenerateFrequency: return "DegenerateFrequency";
    case ErrorKind::EmptyWindow: return "EmptyWindow";
    case ErrorKind::WitnessFailed: return "WitnessFailed";
    case ErrorKind::PhaseUnreachable: return "PhaseUnreachable";
    case ErrorKind::TargetUnreachable: return "TargetUnreachable";
    case ErrorKind::DensityFailed: return "DensityFailed";
    case ErrorKind::NotApplicable: return "NotApplicable";
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::ConfigError: return "ConfigError";
  }
  return "Unknown";
}

}  // namespace liouflow
