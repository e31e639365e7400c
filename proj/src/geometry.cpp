#include "inaccess/geometry.hpp"

#include <algorithm>
#include <limits>

namespace inaccess {

double wrap_two_pi(double angle) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  double a = std::fmod(angle, two_pi);
  if (a < 0.0) a += two_pi;
  if (a >= two_pi) a = 0.0;
  return a;
}

DirectionAngle::DirectionAngle(double radians) {
  constexpr double pi = std::numbers::pi;
  double a = std::fmod(radians, pi);
  if (a < 0.0) a += pi;
  // fmod of a value just below a multiple of pi can round up to pi itself.
  if (a >= pi) a = 0.0;
  theta_ = a;
}

Point2 Isometry::apply(Point2 p) const {
  Point2 q = apply_linear(p) + translation;
  return q;
}

Point2 Isometry::apply_inverse(Point2 q) const {
  return apply_linear_inverse(q - translation);
}

Vec2 Isometry::apply_linear(Vec2 v) const {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  Vec2 w{c * v.x - s * v.y, s * v.x + c * v.y};
  if (reflect) w.y = -w.y;
  return w;
}

Vec2 Isometry::apply_linear_inverse(Vec2 w) const {
  if (reflect) w.y = -w.y;
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  return {c * w.x + s * w.y, -s * w.x + c * w.y};
}

BoundingBox bounding_box(std::span<const Point2> points) {
  constexpr double inf = std::numeric_limits<double>::infinity();
  BoundingBox box{{inf, inf}, {-inf, -inf}};
  for (const Point2& p : points) {
    box.min.x = std::min(box.min.x, p.x);
    box.min.y = std::min(box.min.y, p.y);
    box.max.x = std::max(box.max.x, p.x);
    box.max.y = std::max(box.max.y, p.y);
  }
  return box;
}

double signed_area(std::span<const Point2> polygon) {
  if (polygon.size() < 3) return 0.0;
  // Relative to the first vertex to limit cancellation on small, far-off polygons.
  const Point2 o = polygon[0];
  double twice = 0.0;
  for (std::size_t i = 1; i + 1 < polygon.size(); ++i) {
    twice += cross(polygon[i] - o, polygon[i + 1] - o);
  }
  return 0.5 * twice;
}

Point2 area_centroid(std::span<const Point2> polygon) {
  if (polygon.empty()) return {};
  const Point2 o = polygon[0];
  double twice_area = 0.0;
  Point2 acc{};
  for (std::size_t i = 1; i + 1 < polygon.size(); ++i) {
    const Vec2 a = polygon[i] - o;
    const Vec2 b = polygon[i + 1] - o;
    const double w = cross(a, b);
    twice_area += w;
    acc = acc + w * (a + b);
  }
  const double scale = bounding_box(polygon).diagonal();
  if (std::abs(twice_area) <= 1e-14 * scale * scale) {
    Point2 mean{};
    for (const Point2& p : polygon) mean = mean + (p - o);
    return o + mean / static_cast<double>(polygon.size());
  }
  return o + acc / (3.0 * twice_area);
}

double diameter(std::span<const Point2> points) {
  double best = 0.0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      const Vec2 d = points[j] - points[i];
      best = std::max(best, dot(d, d));
    }
  }
  return std::sqrt(best);
}

std::vector<Point2> clip_halfplane(std::span<const Point2> polygon, Point2 at, Vec2 normal) {
  std::vector<Point2> out;
  const std::size_t n = polygon.size();
  if (n == 0) return out;
  out.reserve(n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    const Point2 a = polygon[i];
    const Point2 b = polygon[(i + 1) % n];
    const double da = dot(a - at, normal);
    const double db = dot(b - at, normal);
    if (da <= 0.0) out.push_back(a);
    if ((da < 0.0 && db > 0.0) || (da > 0.0 && db < 0.0)) {
      const double t = da / (da - db);
      out.push_back(a + t * (b - a));
    }
  }
  // Drop consecutive duplicates produced by vertices lying on the cut line.
  std::vector<Point2> cleaned;
  cleaned.reserve(out.size());
  for (const Point2& p : out) {
    if (cleaned.empty() || !(cleaned.back() == p)) cleaned.push_back(p);
  }
  while (cleaned.size() > 1 && cleaned.front() == cleaned.back()) cleaned.pop_back();
  return cleaned;
}

std::vector<Point2> convex_hull(std::vector<Point2> points) {
  std::sort(points.begin(), points.end(), [](Point2 a, Point2 b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  });
  points.erase(std::unique(points.begin(), points.end()), points.end());
  if (points.size() < 3) return points;
  std::vector<Point2> hull(2 * points.size());
  std::size_t k = 0;
  for (const Point2& p : points) {
    while (k >= 2 && cross(hull[k - 1] - hull[k - 2], p - hull[k - 2]) <= 0.0) --k;
    hull[k++] = p;
  }
  const std::size_t lower = k + 1;
  for (auto it = points.rbegin() + 1; it != points.rend(); ++it) {
    while (k >= lower && cross(hull[k - 1] - hull[k - 2], *it - hull[k - 2]) <= 0.0) --k;
    hull[k++] = *it;
  }
  hull.resize(k - 1);
  return hull;
}

double segment_distance(Point2 p, Point2 a, Point2 b) {
  const Vec2 ab = b - a;
  const double len2 = dot(ab, ab);
  if (len2 == 0.0) return distance(p, a);
  const double t = std::clamp(dot(p - a, ab) / len2, 0.0, 1.0);
  return distance(p, a + t * ab);
}

int winding_number(std::span<const Point2> polygon, Point2 p) {
  int wn = 0;
  const std::size_t n = polygon.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point2 a = polygon[i];
    const Point2 b = polygon[(i + 1) % n];
    const double side = cross(b - a, p - a);
    if (a.y <= p.y) {
      if (b.y > p.y && side > 0.0) ++wn;
    } else {
      if (b.y <= p.y && side < 0.0) --wn;
    }
  }
  return wn;
}

}  // namespace inaccess
