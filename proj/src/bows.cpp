#include "inaccess/bows.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "inaccess/error.hpp"

namespace inaccess {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kParallelTolerance = 1e-10;

[[noreturn]] void out_of_range(double theta, ThetaRange range) {
  std::ostringstream msg;
  msg.precision(17);
  msg << "theta " << theta << " outside [" << range.lo << ", " << range.hi << "]";
  throw Error(ErrorCode::ThetaOutOfRange, msg.str());
}

}  // namespace

ThetaRange bow_theta_range(double lambda) {
  // alpha = acot(lambda) in (0, pi).
  const double alpha = std::atan2(1.0, lambda);
  return {std::max(0.0, 0.5 * kPi - alpha), std::min(0.5 * kPi, kPi - alpha)};
}

Point2 bow_point(double lambda, double r, double theta) {
  const ThetaRange range = bow_theta_range(lambda);
  if (!range.contains(theta)) out_of_range(theta, range);
  const double s = std::sin(theta);
  const double c = std::cos(theta);
  return {r * (c * c * c + lambda * (s * s * s + 2.0 * s * c * c)),
          r * (s * s * s - lambda * s * s * c)};
}

Vec2 bow_derivative(double lambda, double r, double theta) {
  const double s = std::sin(theta);
  const double c = std::cos(theta);
  return {r * (-3.0 * c * c * s + lambda * (3.0 * s * s * c + 2.0 * c * c * c - 4.0 * s * s * c)),
          r * (3.0 * s * s * c - lambda * (2.0 * s * c * c - s * s * s))};
}

std::pair<Point2, Point2> bow_segment(double lambda, double r, double theta) {
  const double s = std::sin(theta);
  const double c = std::cos(theta);
  return {{lambda * r * s + r * c, 0.0}, {lambda * r * s, r * s}};
}

SectorFrame normal_sector_frame(double lambda) {
  SectorFrame frame;
  frame.lambda = lambda;
  frame.alpha = std::atan2(1.0, lambda);
  return frame;
}

SectorFrame sector_frame(const Line2& line_a, const Line2& line_b, Point2 containing) {
  const Vec2 ua = normalized(line_a.direction);
  const Vec2 ub = normalized(line_b.direction);
  const double det = cross(ua, ub);
  if (std::abs(det) <= kParallelTolerance) {
    throw Error(ErrorCode::ParallelLines, "sector sides are parallel");
  }
  // Apex: line_a.point + s * ua lies on line_b.
  const double s = cross(line_b.point - line_a.point, ub) / det;
  const Point2 apex = line_a.point + s * ua;

  // Each side ray points to the side of the other line that holds `containing`.
  const Vec2 rel = containing - apex;
  Vec2 ray_a = cross(ub, ua) * cross(ub, rel) >= 0.0 ? ua : -ua;
  Vec2 ray_b = cross(ua, ub) * cross(ua, rel) >= 0.0 ? ub : -ub;

  SectorFrame frame;
  frame.apex = apex;
  frame.to_normal.angle = -std::atan2(ray_a.y, ray_a.x);
  frame.to_normal.reflect = cross(ray_a, ray_b) < 0.0;
  frame.to_normal.translation = -frame.to_normal.apply_linear(apex);
  frame.alpha = std::acos(std::clamp(dot(ray_a, ray_b), -1.0, 1.0));
  frame.lambda = dot(ray_a, ray_b) / std::abs(cross(ray_a, ray_b));
  return frame;
}

double bow_theta_for_direction(const SectorFrame& frame, Vec2 world_direction) {
  Vec2 d = frame.to_normal.apply_linear(world_direction);
  // Tangent segment direction in normal form is (-cos theta, sin theta), theta in [0, pi].
  if (d.y < 0.0 || (d.y == 0.0 && d.x > 0.0)) d = -d;
  return std::atan2(d.y, -d.x);
}

BowArc full_bow_arc(const SectorFrame& frame, double r) {
  return {frame, r, bow_theta_range(frame.lambda)};
}

Point2 bow_world(const BowArc& arc, double theta) {
  if (!arc.theta_range.contains(theta)) out_of_range(theta, arc.theta_range);
  const ThetaRange full = bow_theta_range(arc.frame.lambda);
  const double t = std::clamp(theta, full.lo, full.hi);
  return arc.frame.world_from_normal(bow_point(arc.frame.lambda, arc.r, t));
}

}  // namespace inaccess
