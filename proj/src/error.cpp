#include "inaccess/error.hpp"

namespace inaccess {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonFiniteCoordinate: return "NonFiniteCoordinate";
    case ErrorCode::TooFewVertices: return "TooFewVertices";
    case ErrorCode::NotConvex: return "NotConvex";
    case ErrorCode::SelfIntersecting: return "SelfIntersecting";
    case ErrorCode::DegenerateEdge: return "DegenerateEdge";
    case ErrorCode::PointOutside: return "PointOutside";
    case ErrorCode::PointTooCloseToBoundary: return "PointTooCloseToBoundary";
    case ErrorCode::ThetaOutOfRange: return "ThetaOutOfRange";
    case ErrorCode::ParallelLines: return "ParallelLines";
    case ErrorCode::EmptyLevelSet: return "EmptyLevelSet";
    case ErrorCode::AnchorNotFound: return "AnchorNotFound";
    case ErrorCode::LabelingInconsistent: return "LabelingInconsistent";
    case ErrorCode::NotConverged: return "NotConverged";
    case ErrorCode::NoRootBracketed: return "NoRootBracketed";
    case ErrorCode::DegenerateCircle: return "DegenerateCircle";
    case ErrorCode::InvalidShape: return "InvalidShape";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace inaccess
