#pragma once

#include <utility>

#include "inaccess/geometry.hpp"

namespace inaccess {

// A lambda-bow is the envelope of the length-r segments whose endpoints slide
// on the two sides of a sector. In normal form the sector sides are the rays
// (x, 0), x >= 0 and (lambda*y, y), y >= 0, with lambda = cot(alpha) for the
// sector angle alpha. The segment at parameter theta runs from
// (lambda*r*sin(theta) + r*cos(theta), 0) to (lambda*r*sin(theta), r*sin(theta)).

struct ThetaRange {
  double lo = 0.0;
  double hi = 0.0;

  bool contains(double theta, double slack = 1e-12) const {
    return theta >= lo - slack && theta <= hi + slack;
  }
};

/// Closed parameter range on which the bow bounds the superlevel set:
/// [0, pi - alpha] (obtuse), [0, pi/2] (right), [pi/2 - alpha, pi/2] (acute).
ThetaRange bow_theta_range(double lambda);

/// Normal-form bow point; throws ThetaOutOfRange outside bow_theta_range.
Point2 bow_point(double lambda, double r, double theta);
/// d/dtheta of bow_point (no range check).
Vec2 bow_derivative(double lambda, double r, double theta);
/// Endpoints of the tangent segment at theta, on the x-axis side first.
std::pair<Point2, Point2> bow_segment(double lambda, double r, double theta);

/// Isometry from world coordinates to the normal form of a sector, plus its lambda.
struct SectorFrame {
  Point2 apex;
  Isometry to_normal;  ///< world -> normal form
  double lambda = 0.0;
  double alpha = 0.0;  ///< interior sector angle in (0, pi)

  Point2 normal_from_world(Point2 world) const { return to_normal.apply(world); }
  Point2 world_from_normal(Point2 normal) const { return to_normal.apply_inverse(normal); }
};

/// Frame of the standard sector itself (identity isometry).
SectorFrame normal_sector_frame(double lambda);

/// Sector bounded by two lines and containing `containing`; line_a is mapped
/// onto the x-axis side. When the rotation alone would put line_b below the
/// x-axis the frame also reflects. Throws ParallelLines for parallel inputs.
SectorFrame sector_frame(const Line2& line_a, const Line2& line_b, Point2 containing);

/// Bow parameter of the tangent segment with the given world direction.
double bow_theta_for_direction(const SectorFrame& frame, Vec2 world_direction);

struct BowArc {
  SectorFrame frame;
  double r = 0.0;
  ThetaRange theta_range;
};

/// Arc over the full admissible range for the frame's lambda.
BowArc full_bow_arc(const SectorFrame& frame, double r);

/// World point of an arc; throws ThetaOutOfRange outside arc.theta_range.
Point2 bow_world(const BowArc& arc, double theta);

}  // namespace inaccess
