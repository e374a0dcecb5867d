#include "genrank/error.hpp"

namespace genrank {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::CycleDetected: return "CycleDetected";
    case Errc::UnknownElement: return "UnknownElement";
    case Errc::DuplicateElement: return "DuplicateElement";
    case Errc::EmptySubset: return "EmptySubset";
    case Errc::InvalidIndex: return "InvalidIndex";
    case Errc::NotConnected: return "NotConnected";
    case Errc::NotNested: return "NotNested";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::ShapeMismatch: return "ShapeMismatch";
    case Errc::InvalidInterval: return "InvalidInterval";
    case Errc::InvalidModulus: return "InvalidModulus";
    case Errc::NotZigzag: return "NotZigzag";
    case Errc::NotLinear: return "NotLinear";
    case Errc::NonMonotoneCriticalValues: return "NonMonotoneCriticalValues";
    case Errc::EmptyDiagram: return "EmptyDiagram";
    case Errc::DanglingEdge: return "DanglingEdge";
    case Errc::MissingDecoration: return "MissingDecoration";
    case Errc::NegativeMultiplicity: return "NegativeMultiplicity";
    case Errc::Parse: return "Parse";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace genrank
