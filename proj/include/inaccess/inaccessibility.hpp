#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "inaccess/domains.hpp"

namespace inaccess {

/// Chord lengths tying the minimum within this tolerance are all reported.
inline constexpr double kTieTolerance = 1e-9;

struct ProfileSample {
  DirectionAngle theta;
  double length = 0.0;
};

/// Chord length through p at every vertex-angle breakpoint plus a uniform grid
/// of `grid` directions, sorted by angle.
std::vector<ProfileSample> profile(const ConvexPolygon& domain, Point2 p, std::size_t grid = 360);
std::vector<ProfileSample> profile(const Domain& domain, Point2 p, std::size_t grid = 360);

struct RResult {
  double r = 0.0;
  /// Smallest-angle chord among `minimizers`.
  Chord minimizing_chord;
  /// (edge_a, edge_b) of the minimizing chord.
  std::pair<std::size_t, std::size_t> active_pair{kNoEdge, kNoEdge};
  /// Directions from p to the vertices, reduced to [0, pi) and sorted.
  std::vector<DirectionAngle> profile_breakpoints;
  /// Every chord within kTieTolerance of the minimum, ordered by angle.
  std::vector<Chord> minimizers;
};

/// Global minimum over directions of the chord length through p.
///
/// The direction circle is split at the vertex breakpoints. Inside one piece
/// the chord runs between a fixed pair of edges and its length is
///   h_f / cos(theta - phi_f) + h_b / cos(theta - phi_b - pi),
/// a sum of two secants and hence convex, so each piece is minimised by
/// bisection on the analytic derivative.
RResult inaccessibility_at(const ConvexPolygon& domain, Point2 p);
RResult inaccessibility_at(const SampledConvexDomain& domain, Point2 p);
/// Rejects SimplePolygon with NotConvex; use oracle_r for those.
RResult inaccessibility_at(const Domain& domain, Point2 p);

/// Value-only shorthand for inaccessibility_at(domain, p).r.
double inaccessibility(const ConvexPolygon& domain, Point2 p);

}  // namespace inaccess
