#include "tlc/error.hpp"

namespace tlc {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::OddLength: return "OddLength";
    case ErrorCode::BadMultiplicity: return "BadMultiplicity";
    case ErrorCode::NotTreeLike: return "NotTreeLike";
    case ErrorCode::InvalidTree: return "InvalidTree";
    case ErrorCode::Colliding: return "Colliding";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::DegenerateLeafCount: return "DegenerateLeafCount";
    case ErrorCode::PathReversing: return "PathReversing";
    case ErrorCode::SizeLimit: return "SizeLimit";
    case ErrorCode::NotVertexCentered: return "NotVertexCentered";
    case ErrorCode::RealizationFailed: return "RealizationFailed";
    case ErrorCode::TangentialCrossing: return "TangentialCrossing";
  }
  return "Unknown";
}

ParseError::ParseError(int line, int column, const std::string& what)
    : Error(ErrorCode::ParseError,
            "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
      line_(line),
      column_(column) {}

}  // namespace tlc
