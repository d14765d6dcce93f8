#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pathex {

enum class ErrorKind {
  InvalidPattern,
  InvalidAnchor,
  InvalidVertex,
  InvalidGraph,
  InvalidSpec,
  NonProbabilityMeasure,
  DegenerateMeasure,
  ResourceLimit,
  Parse,
  Usage,
};

std::string_view to_string(ErrorKind kind);

/// Exception carrying a machine-readable kind alongside the message.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace pathex
