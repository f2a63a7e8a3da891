#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace toricflow {

enum class ErrorKind {
  InvalidArgument,
  RankMismatch,
  SideMismatch,
  ZeroVector,
  NotPointed,
  NotFullDimensional,
  NotNonnegative,
  NormalityRequired,
  NotParabolic,
  NotARoot,
  IllDefinedRoot,
  RankLimitExceeded,
  BoundExceeded,
  SafetyBoundExceeded,
};

std::string_view to_string(ErrorKind kind);

/// Every failure in the library is reported through this type; the kind is
/// what callers (and the CLI exit-code table) dispatch on.
class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

}  // namespace toricflow
