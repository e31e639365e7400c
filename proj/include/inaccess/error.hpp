#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace inaccess {

enum class ErrorCode {
  NonFiniteCoordinate,
  TooFewVertices,
  NotConvex,
  SelfIntersecting,
  DegenerateEdge,
  PointOutside,
  PointTooCloseToBoundary,
  ThetaOutOfRange,
  ParallelLines,
  EmptyLevelSet,
  AnchorNotFound,
  LabelingInconsistent,
  NotConverged,
  NoRootBracketed,
  DegenerateCircle,
  InvalidShape,
  InvalidArgument,
  ParseError,
};

std::string_view to_string(ErrorCode code);

// Every failure in the library is reported as an Error carrying a code; the
// optional index list names the offending vertices or edges when that makes
// sense (e.g. the collinear triple for NotConvex).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::vector<std::size_t> indices = {})
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code),
        indices_(std::move(indices)) {}

  ErrorCode code() const noexcept { return code_; }
  const std::vector<std::size_t>& indices() const noexcept { return indices_; }

 private:
  ErrorCode code_;
  std::vector<std::size_t> indices_;
};

}  // namespace inaccess
