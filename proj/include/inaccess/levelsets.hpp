#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "inaccess/bows.hpp"
#include "inaccess/domains.hpp"

namespace inaccess {

/// One point of a level curve, found along the ray at `ray_angle` from the anchor.
struct ContourSample {
  Point2 point;
  double ray_angle = 0.0;
  /// The superlevel set reaches the boundary along this ray.
  bool on_boundary = false;
  std::size_t boundary_edge = kNoEdge;
};

enum class ArcKind { Bow, BoundarySegment };

/// Maximal run of the level curve generated by a single edge pair (a bow) or
/// lying on a single edge.
struct ArcPiece {
  ArcKind kind = ArcKind::Bow;
  std::optional<BowArc> bow;
  std::pair<std::size_t, std::size_t> edge_pair{kNoEdge, kNoEdge};  ///< bows only, sorted
  std::size_t edge = kNoEdge;                                          ///< segments only
  Point2 start;
  Point2 end;
  std::size_t first_sample = 0;
  std::size_t last_sample = 0;  ///< inclusive; may wrap past the end of the contour

  std::string label() const;
};

struct LevelSet {
  double r = 0.0;
  Point2 anchor;
  std::vector<ContourSample> contour;
  std::vector<ArcPiece> arcs;

  std::vector<Point2> points() const;
};

struct ContourOptions {
  std::size_t rays = 512;
  double tolerance = 1e-10;
  /// Interior point with r(anchor) > level; defaults to the maximizer.
  std::optional<Point2> anchor;
};

/// Boundary of {r >= level} traced by root finding along rays from the anchor.
/// r is non-increasing along every such ray because superlevel sets are convex.
LevelSet contour(const ConvexPolygon& domain, double level, const ContourOptions& options = {});
LevelSet contour(const SampledConvexDomain& domain, double level,
                 const ContourOptions& options = {});

/// Splits the contour into bow arcs and boundary segments and fills level.arcs.
/// Throws LabelingInconsistent when an arc does not reproduce its samples.
void label_arcs(const ConvexPolygon& domain, LevelSet& level);

/// contour() followed by label_arcs().
LevelSet level_set(const ConvexPolygon& domain, double level, const ContourOptions& options = {});

}  // namespace inaccess
