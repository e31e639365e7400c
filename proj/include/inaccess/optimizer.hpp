#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "inaccess/domains.hpp"
#include "inaccess/inaccessibility.hpp"

namespace inaccess {

/// Half-plane {x : dot(x - at, normal) <= 0} certified to contain every point
/// whose r-value is at least r(at). The boundary line carries the chord.
struct Cut {
  Point2 at;
  Vec2 normal;  ///< unit, pointing into the discarded side
  Chord chord;

  bool keeps(Point2 x, double slack = 0.0) const { return dot(x - at, normal) <= slack; }
};

enum class CutKind {
  Cuts,              ///< one cut per minimizing chord
  ParallelSupports,  ///< a minimizing chord joins parallel supporting lines: r(p) = R
  AmbiguousSide,     ///< the cuts pin p down completely: p is a maximizer
};

struct CutOutcome {
  CutKind kind = CutKind::Cuts;
  double r = 0.0;
  std::vector<Cut> cuts;
  /// Edge pairs of the minimizing chords with parallel supports.
  std::vector<std::pair<std::size_t, std::size_t>> parallel_pairs;
};

/// Builds the separating cuts at p from its minimizing chords.
CutOutcome cut_at(const ConvexPolygon& domain, Point2 p);

/// Cut normal from the supporting normals at the chord endpoints: with e1, e2
/// the boundary tangents and v a unit normal of the chord, the sign of v is
/// fixed by dot(u, PQ) < 0 for u = (<e1,v> e2 - <e2,v> e1) / (<e1,v><e2,v>).
/// Returns nullopt when the supporting normals are parallel.
std::optional<Vec2> separating_normal(Vec2 support_a, Vec2 support_b, const Chord& chord);

/// Compares r at p + delta*normal and p - delta*normal: +1 when the positive
/// side is larger, -1 when the negative side is, 0 when within 1e-12.
int probe_side(const ConvexPolygon& domain, Point2 p, Vec2 normal, double delta);

/// Antiparallel edge pairs whose lines are `width` apart within `tolerance`.
std::vector<std::pair<std::size_t, std::size_t>> parallel_side_pairs(const ConvexPolygon& domain,
                                                                      double width,
                                                                      double tolerance = 1e-9);

struct MaxOptions {
  double tol = 1e-9;
  std::size_t max_iterations = 10000;
  bool record_trace = false;
};

/// One cutting-plane step, kept when MaxOptions::record_trace is set.
struct IterationRecord {
  Point2 query;
  double r = 0.0;
  CutKind kind = CutKind::Cuts;
  std::vector<Point2> localization_before;
  std::vector<Cut> cuts;
  double area_before = 0.0;
  double area_after = 0.0;
};

enum class Termination { Converged, ParallelSupports, OptimalityCertificate };

struct MaxResult {
  double R = 0.0;
  Point2 point;
  bool is_region = false;
  std::vector<std::pair<std::size_t, std::size_t>> parallel_side_pairs;
  std::size_t iterations = 0;
  double localization_diameter = 0.0;
  Termination termination = Termination::Converged;
  /// Farthest pair of points on the near-maximal contour, for region results.
  std::optional<std::pair<Point2, Point2>> region_extent;
  std::vector<IterationRecord> trace;
};

/// Level below R used to outline a maximizing region.
inline constexpr double kRegionLevelOffset = 1e-7;

/// Centroid cutting-plane maximisation of r.
MaxResult maximize(const ConvexPolygon& domain, const MaxOptions& options = {});
MaxResult maximize(const SampledConvexDomain& domain, const MaxOptions& options = {});

}  // namespace inaccess
