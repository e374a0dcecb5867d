#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace genrank {

enum class Errc {
  CycleDetected,
  UnknownElement,
  DuplicateElement,
  EmptySubset,
  InvalidIndex,
  NotConnected,
  NotNested,
  DimensionMismatch,
  ShapeMismatch,
  InvalidInterval,
  InvalidModulus,
  NotZigzag,
  NotLinear,
  NonMonotoneCriticalValues,
  EmptyDiagram,
  DanglingEdge,
  MissingDecoration,
  NegativeMultiplicity,
  Parse,
};

std::string_view to_string(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message);
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace genrank
