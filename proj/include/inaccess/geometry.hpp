#pragma once

#include <cmath>
#include <numbers>
#include <span>
#include <vector>

namespace inaccess {

/// A point (or free vector) in the plane.
struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend constexpr Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
  friend constexpr Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
  friend constexpr Point2 operator-(Point2 a) { return {-a.x, -a.y}; }
  friend constexpr Point2 operator*(double s, Point2 a) { return {s * a.x, s * a.y}; }
  friend constexpr Point2 operator*(Point2 a, double s) { return {s * a.x, s * a.y}; }
  friend constexpr Point2 operator/(Point2 a, double s) { return {a.x / s, a.y / s}; }
  friend constexpr bool operator==(Point2 a, Point2 b) = default;
};

using Vec2 = Point2;

constexpr double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
constexpr double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }
inline double distance(Point2 a, Point2 b) { return norm(b - a); }
inline Vec2 normalized(Vec2 a) { return a / norm(a); }
/// Counterclockwise quarter turn.
constexpr Vec2 perp(Vec2 a) { return {-a.y, a.x}; }
inline Vec2 unit_vector(double angle) { return {std::cos(angle), std::sin(angle)}; }
inline bool is_finite(Point2 p) { return std::isfinite(p.x) && std::isfinite(p.y); }

/// Reduces an angle to [0, 2*pi).
double wrap_two_pi(double angle);

/// Unoriented line direction; v and -v are identified, so the angle lives in [0, pi).
class DirectionAngle {
 public:
  DirectionAngle() = default;
  explicit DirectionAngle(double radians);

  double radians() const { return theta_; }
  Vec2 unit() const { return unit_vector(theta_); }

  friend bool operator==(const DirectionAngle&, const DirectionAngle&) = default;

 private:
  double theta_ = 0.0;
};

/// Rigid motion q = R(angle) * p + translation, optionally followed by y -> -y.
struct Isometry {
  double angle = 0.0;
  Vec2 translation{};
  bool reflect = false;

  Point2 apply(Point2 p) const;
  Point2 apply_inverse(Point2 q) const;
  Vec2 apply_linear(Vec2 v) const;
  Vec2 apply_linear_inverse(Vec2 v) const;
};

/// A line through `point` with (not necessarily unit) `direction`.
struct Line2 {
  Point2 point;
  Vec2 direction;
};

struct BoundingBox {
  Point2 min;
  Point2 max;

  double width() const { return max.x - min.x; }
  double height() const { return max.y - min.y; }
  double diagonal() const { return std::hypot(width(), height()); }
};

BoundingBox bounding_box(std::span<const Point2> points);

// Polygon utilities for vertex chains (closed implicitly).
double signed_area(std::span<const Point2> polygon);
/// Area centroid; falls back to the vertex mean for degenerate (zero-area) chains.
Point2 area_centroid(std::span<const Point2> polygon);
/// Largest pairwise vertex distance.
double diameter(std::span<const Point2> points);
/// Keeps the part of a convex polygon with dot(x - at, normal) <= 0.
std::vector<Point2> clip_halfplane(std::span<const Point2> polygon, Point2 at, Vec2 normal);
/// Convex hull in counterclockwise order without collinear points.
std::vector<Point2> convex_hull(std::vector<Point2> points);
/// Distance from p to the segment [a, b].
double segment_distance(Point2 p, Point2 a, Point2 b);
/// Winding number of the closed chain around p (nonzero means inside).
int winding_number(std::span<const Point2> polygon, Point2 p);

}  // namespace inaccess
