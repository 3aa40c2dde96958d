#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace postulatum {

enum class ErrorCode {
  Parse,
  DegenerateDirection,
  NotOnBoundary,
  AdjacentSidesOnly,
  DegenerateChord,
  PointOnLine,
  PointOutsideSpace,
  AntipodalPair,
  CoincidentPoints,
  NotOnC,
  IrrationalOnC,
  UnknownModel,
};

std::string_view error_name(ErrorCode code);

/// Domain and parse failures. `code()` lets callers map the failure to an
/// exit status without string matching.
class GeometryError : public std::runtime_error {
 public:
  GeometryError(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

inline std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::Parse: return "ParseError";
    case ErrorCode::DegenerateDirection: return "DegenerateDirection";
    case ErrorCode::NotOnBoundary: return "NotOnBoundary";
    case ErrorCode::AdjacentSidesOnly: return "AdjacentSidesOnly";
    case ErrorCode::DegenerateChord: return "DegenerateChord";
    case ErrorCode::PointOnLine: return "PointOnLine";
    case ErrorCode::PointOutsideSpace: return "PointOutsideSpace";
    case ErrorCode::AntipodalPair: return "AntipodalPair";
    case ErrorCode::CoincidentPoints: return "CoincidentPoints";
    case ErrorCode::NotOnC: return "NotOnC";
    case ErrorCode::IrrationalOnC: return "IrrationalOnC";
    case ErrorCode::UnknownModel: return "UnknownModel";
  }
  return "Unknown";
}

}  // namespace postulatum
