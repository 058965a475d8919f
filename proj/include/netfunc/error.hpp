#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace netfunc {

enum class ErrorCode {
  LoopEdge,
  VertexOutOfRange,
  CliqueBudgetExceeded,
  InvalidParam,
  Disconnected,
  TooSmall,
  SingularZ,
  RecursionBudgetExceeded,
  ConvergenceFailure,
  SizeCapExceeded,
  NoEdges,
  RadiusTooLarge,
  ParseError,
  UnknownFunctional,
};

std::string_view to_string(ErrorCode code);

/// Exception carrying a machine-readable code alongside the message.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Raised by the edge-list reader; carries the 1-based offending line.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : Error(ErrorCode::ParseError,
              "line " + std::to_string(line) + ": " + message),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace netfunc
