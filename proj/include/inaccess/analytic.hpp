#pragma once

#include <array>
#include <cstddef>
#include <utility>
#include <vector>

#include "inaccess/bows.hpp"
#include "inaccess/domains.hpp"

namespace inaccess {

// Isosceles triangle of height 1 with vertices (0,0), (2*lambda,0), (lambda,1).
ConvexPolygon isosceles_triangle(double lambda);

struct IsoscelesSolution {
  double lambda = 0.0;
  double theta = 0.0;  ///< direction parameter of the three minimizing chords
  double R = 0.0;
  double height = 0.0;  ///< y-coordinate of the maximizer
  Point2 point;         ///< (lambda, height)
  std::size_t roots = 0;
};

/// Residual of the stationarity condition relating theta and lambda.
double isosceles_residual(double lambda, double theta);
/// lambda as a function of theta, the inverse of the stationarity condition.
double isosceles_lambda(double theta);
/// R from (lambda, theta).
double isosceles_R(double lambda, double theta);
/// Maximizer height directly from (lambda, theta).
double isosceles_height(double lambda, double theta);

/// Brackets the stationarity root on a 1024-point scan of (0, pi/2), bisects
/// to 1e-14 and keeps the root confirmed by evaluating r at the predicted
/// maximizer. Throws NoRootBracketed if none qualifies.
IsoscelesSolution isosceles_solve(double lambda);

/// Orthocentre, incentre, barycentre and circumcentre of isosceles_triangle(lambda).
struct NotablePoints {
  Point2 H, I, G, O;
};
NotablePoints notable_points(double lambda);

/// Rectangle [0,a] x [0,b] with a >= b.
struct RectangleSolution {
  double R = 0.0;
  /// Whether the maximizing region reaches the boundary (a >= 2b).
  bool boundary_contact = false;
  /// Astroid arcs (lambda = 0 bows at r = b) from the four corners, counterclockwise from (0,0).
  std::array<BowArc, 4> corner_bows;
  /// Pieces of the long sides inside the maximizing region (empty without contact).
  std::vector<std::pair<Point2, Point2>> contact_segments;

  /// Membership in the maximizing region: inside the rectangle and outside every corner astroid.
  bool in_region(Point2 p, double a, double b) const;
};
RectangleSolution rectangle_solution(double a, double b);
ConvexPolygon rectangle(double a, double b);

/// Ellipse x^2/a^2 + y^2/b^2 < 1 with a > b: the maximizers form the segment
/// {(0, y) : |y| <= y0}.
struct EllipseSolution {
  double R = 0.0;
  double y0 = 0.0;
  Point2 lower, upper;
};
EllipseSolution ellipse_solution(double a, double b);

/// Length of the chord through (0, y) with direction (a cos theta, b sin theta).
double ellipse_chord_length(double a, double b, double y, double theta);
/// Minimum of ellipse_chord_length over theta. The squared length is a concave
/// quadratic in cos^2(theta), so only the vertical and horizontal chords matter.
double ellipse_min_chord(double a, double b, double y);

/// Trapezoid with vertices (-a, +-(1 - epsilon)), (a, +-1) and its mirror image
/// in the y-axis. Prolonging the long sides gives an isosceles triangle whose
/// maximizer is also the trapezoid's.
struct TrapezoidPair {
  ConvexPolygon trapezoid;
  ConvexPolygon mirrored;
  IsoscelesSolution normalized;  ///< solution of the rescaled prolonged triangle
  double R = 0.0;
  Point2 predicted;
  Point2 predicted_mirrored;
};
TrapezoidPair trapezoid_pair(double a, double epsilon);

}  // namespace inaccess
