#include "inaccess/domains.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "inaccess/error.hpp"

namespace inaccess {
namespace {

void require_finite(std::span<const Point2> raw) {
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (!is_finite(raw[i])) {
      throw Error(ErrorCode::NonFiniteCoordinate,
                  "vertex " + std::to_string(i) + " has a non-finite coordinate", {i});
    }
  }
}

void require_distinct_neighbours(std::span<const Point2> raw) {
  const std::size_t n = raw.size();
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = (i + 1) % n;
    if (distance(raw[i], raw[j]) <= kDuplicateTolerance) {
      throw Error(ErrorCode::DegenerateEdge,
                  "vertices " + std::to_string(i) + " and " + std::to_string(j) + " coincide",
                  {i, j});
    }
  }
}

int orientation_sign(Point2 a, Point2 b, Point2 c) {
  const double v = cross(b - a, c - a);
  return (v > 0.0) - (v < 0.0);
}

bool on_segment(Point2 a, Point2 b, Point2 p) {
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

bool segments_touch(Point2 p1, Point2 p2, Point2 q1, Point2 q2) {
  const int o1 = orientation_sign(p1, p2, q1);
  const int o2 = orientation_sign(p1, p2, q2);
  const int o3 = orientation_sign(q1, q2, p1);
  const int o4 = orientation_sign(q1, q2, p2);
  if (o1 != o2 && o3 != o4) return true;
  if (o1 == 0 && on_segment(p1, p2, q1)) return true;
  if (o2 == 0 && on_segment(p1, p2, q2)) return true;
  if (o3 == 0 && on_segment(q1, q2, p1)) return true;
  if (o4 == 0 && on_segment(q1, q2, p2)) return true;
  return false;
}

void require_simple(std::span<const Point2> v) {
  const std::size_t n = v.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point2 a = v[i];
    const Point2 b = v[(i + 1) % n];
    // Adjacent edges may only share their common vertex: no backtracking overlap.
    const Point2 c = v[(i + 2) % n];
    if (cross(b - a, c - b) == 0.0 && dot(b - a, c - b) < 0.0) {
      throw Error(ErrorCode::SelfIntersecting,
                  "edges " + std::to_string(i) + " and " + std::to_string((i + 1) % n) +
                      " fold back onto each other",
                  {i, (i + 1) % n});
    }
    for (std::size_t j = i + 2; j < n; ++j) {
      if (i == 0 && j == n - 1) continue;
      if (segments_touch(a, b, v[j], v[(j + 1) % n])) {
        throw Error(ErrorCode::SelfIntersecting,
                    "edges " + std::to_string(i) + " and " + std::to_string(j) + " intersect",
                    {i, j});
      }
    }
  }
}

// Returns the chain in counterclockwise order plus the original index of each vertex.
std::vector<std::size_t> orient_ccw(std::vector<Point2>& v, double area) {
  std::vector<std::size_t> original(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) original[i] = i;
  if (area < 0.0) {
    std::reverse(v.begin(), v.end());
    std::reverse(original.begin(), original.end());
  }
  return original;
}

}  // namespace

// ---------------------------------------------------------------------------
// ConvexPolygon

ConvexPolygon::ConvexPolygon(std::vector<Point2> vertices) : vertices_(std::move(vertices)) {
  const std::size_t n = vertices_.size();
  normals_.resize(n);
  offsets_.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    const Vec2 e = vertex(k + 1) - vertex(k);
    const Vec2 out = normalized(Vec2{e.y, -e.x});
    normals_[k] = out;
    offsets_[k] = dot(vertex(k), out);
  }
  bounds_ = bounding_box(vertices_);
  diameter_ = inaccess::diameter(vertices_);
}

ConvexPolygon ConvexPolygon::from_vertices(std::vector<Point2> v) {
  require_finite(v);
  if (v.size() < 3) {
    throw Error(ErrorCode::TooFewVertices,
                "a convex polygon needs at least 3 vertices, got " + std::to_string(v.size()));
  }
  require_distinct_neighbours(v);
  const double area = signed_area(v);
  const auto original = orient_ccw(v, area);
  const std::size_t n = v.size();

  double turning = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t prev = (i + n - 1) % n;
    const std::size_t next = (i + 1) % n;
    const Vec2 e0 = v[i] - v[prev];
    const Vec2 e1 = v[next] - v[i];
    const double c = cross(e0, e1);
    if (!(c > 0.0)) {
      std::vector<std::size_t> triple{original[prev], original[i], original[next]};
      if (area < 0.0) std::reverse(triple.begin(), triple.end());
      std::ostringstream msg;
      msg << "vertices " << triple[0] << ", " << triple[1] << ", " << triple[2]
          << (c == 0.0 ? " are collinear" : " make a reflex turn");
      throw Error(ErrorCode::NotConvex, msg.str(), triple);
    }
    turning += std::atan2(c, dot(e0, e1));
  }
  if (std::abs(turning - 2.0 * std::numbers::pi) > 1e-6) {
    throw Error(ErrorCode::NotConvex, "vertex chain winds more than once");
  }
  return ConvexPolygon(std::move(v));
}

double ConvexPolygon::boundary_distance(Point2 p) const {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < vertices_.size(); ++k) {
    best = std::min(best, offsets_[k] - dot(p, normals_[k]));
  }
  return best;
}

// ---------------------------------------------------------------------------
// SimplePolygon

SimplePolygon::SimplePolygon(std::vector<Point2> vertices)
    : vertices_(std::move(vertices)), bounds_(bounding_box(vertices_)) {}

SimplePolygon SimplePolygon::from_vertices(std::vector<Point2> v) {
  require_finite(v);
  if (v.size() < 3) {
    throw Error(ErrorCode::TooFewVertices,
                "a polygon needs at least 3 vertices, got " + std::to_string(v.size()));
  }
  require_distinct_neighbours(v);
  require_simple(v);
  const double area = signed_area(v);
  if (area == 0.0) throw Error(ErrorCode::SelfIntersecting, "polygon has zero area");
  orient_ccw(v, area);
  return SimplePolygon(std::move(v));
}

double SimplePolygon::boundary_distance(Point2 p) const {
  double best = std::numeric_limits<double>::infinity();
  const std::size_t n = vertices_.size();
  for (std::size_t k = 0; k < n; ++k) {
    best = std::min(best, segment_distance(p, vertices_[k], vertices_[(k + 1) % n]));
  }
  return best;
}

bool SimplePolygon::contains(Point2 p) const {
  return winding_number(vertices_, p) != 0 && boundary_distance(p) > 0.0;
}

// ---------------------------------------------------------------------------
// SampledConvexDomain

SampledConvexDomain SampledConvexDomain::ellipse(double a, double b, std::size_t count) {
  if (!(a > 0.0) || !(b > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "ellipse semi-axes must be positive");
  }
  if (count < kMinSampleCount) {
    throw Error(ErrorCode::InvalidArgument,
                "sampled domains need at least " + std::to_string(kMinSampleCount) + " points");
  }
  std::vector<Point2> pts(count);
  for (std::size_t k = 0; k < count; ++k) {
    const double t = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(count);
    pts[k] = {a * std::cos(t), b * std::sin(t)};
  }
  return SampledConvexDomain(ConvexPolygon::from_vertices(std::move(pts)),
                             {SampleSource::Shape::Ellipse, a, b, count});
}

SampledConvexDomain SampledConvexDomain::semicircle(double radius, std::size_t count) {
  if (!(radius > 0.0)) throw Error(ErrorCode::InvalidArgument, "radius must be positive");
  if (count < kMinSampleCount) {
    throw Error(ErrorCode::InvalidArgument,
                "sampled domains need at least " + std::to_string(kMinSampleCount) + " points");
  }
  std::vector<Point2> pts(count);
  for (std::size_t k = 0; k < count; ++k) {
    const double t = -0.5 * std::numbers::pi +
                     std::numbers::pi * static_cast<double>(k) / static_cast<double>(count - 1);
    pts[k] = {radius * std::cos(t), radius * std::sin(t)};
  }
  pts.front() = {0.0, -radius};
  pts.back() = {0.0, radius};
  return SampledConvexDomain(ConvexPolygon::from_vertices(std::move(pts)),
                             {SampleSource::Shape::Semicircle, radius, radius, count});
}

SampledConvexDomain SampledConvexDomain::from_boundary(std::vector<Point2> boundary) {
  const std::size_t count = boundary.size();
  if (count < kMinSampleCount) {
    throw Error(ErrorCode::InvalidArgument,
                "sampled domains need at least " + std::to_string(kMinSampleCount) + " points");
  }
  return SampledConvexDomain(ConvexPolygon::from_vertices(std::move(boundary)),
                             {SampleSource::Shape::Points, 0.0, 0.0, count});
}

// ---------------------------------------------------------------------------

Domain validate(std::vector<Point2> raw, DomainKind kind) {
  switch (kind) {
    case DomainKind::Convex: return ConvexPolygon::from_vertices(std::move(raw));
    case DomainKind::Simple: return SimplePolygon::from_vertices(std::move(raw));
    case DomainKind::Sampled: return SampledConvexDomain::from_boundary(std::move(raw));
  }
  throw Error(ErrorCode::InvalidArgument, "unknown domain kind");
}

const ConvexPolygon* as_convex(const Domain& domain) {
  if (const auto* c = std::get_if<ConvexPolygon>(&domain)) return c;
  if (const auto* s = std::get_if<SampledConvexDomain>(&domain)) return &s->polygon();
  return nullptr;
}

void require_interior(const ConvexPolygon& domain, Point2 p) {
  if (!is_finite(p)) throw Error(ErrorCode::NonFiniteCoordinate, "query point is not finite");
  const double d = domain.boundary_distance(p);
  if (d <= -kBoundaryBand) throw Error(ErrorCode::PointOutside, "point lies outside the domain");
  if (d < kBoundaryBand) {
    throw Error(ErrorCode::PointTooCloseToBoundary, "point lies within 1e-12 of the boundary");
  }
}

void require_interior(const SimplePolygon& domain, Point2 p) {
  if (!is_finite(p)) throw Error(ErrorCode::NonFiniteCoordinate, "query point is not finite");
  const double d = domain.boundary_distance(p);
  if (d < kBoundaryBand) {
    throw Error(ErrorCode::PointTooCloseToBoundary, "point lies within 1e-12 of the boundary");
  }
  if (winding_number(domain.vertices(), p) == 0) {
    throw Error(ErrorCode::PointOutside, "point lies outside the domain");
  }
}

Chord chord_through(const ConvexPolygon& domain, Point2 p, DirectionAngle theta) {
  require_interior(domain, p);
  const Vec2 u = theta.unit();
  const std::size_t n = domain.size();
  constexpr double inf = std::numeric_limits<double>::infinity();
  double t_fwd = inf, t_bwd = inf;
  std::size_t k_fwd = kNoEdge, k_bwd = kNoEdge;

  auto consider = [n](double t, std::size_t k, double& best_t, std::size_t& best_k) {
    const double tol = 1e-12 * (1.0 + best_t);
    if (best_k == kNoEdge || t < best_t - tol) {
      best_t = t;
      best_k = k;
    } else if (std::abs(t - best_t) <= tol) {
      // Vertex hit: take the edge that starts at the shared vertex.
      if (k == (best_k + 1) % n) best_k = k;
      best_t = std::min(best_t, t);
    }
  };

  for (std::size_t k = 0; k < n; ++k) {
    const double h = domain.offset(k) - dot(p, domain.normal(k));
    const double dn = dot(u, domain.normal(k));
    if (dn > 0.0) consider(h / dn, k, t_fwd, k_fwd);
    if (dn < 0.0) consider(-h / dn, k, t_bwd, k_bwd);
  }
  Chord c;
  c.through = p;
  c.direction = theta;
  c.a = p - t_bwd * u;
  c.b = p + t_fwd * u;
  c.length = t_fwd + t_bwd;
  c.edge_a = k_bwd;
  c.edge_b = k_fwd;
  return c;
}

Chord chord_through(const SimplePolygon& domain, Point2 p, DirectionAngle theta) {
  require_interior(domain, p);
  const Vec2 u = theta.unit();
  const auto v = domain.vertices();
  const std::size_t n = v.size();
  constexpr double inf = std::numeric_limits<double>::infinity();
  double s_fwd = inf, s_bwd = inf;
  std::size_t k_fwd = kNoEdge, k_bwd = kNoEdge;

  auto record = [&](double s, std::size_t k) {
    if (s > 0.0 && s < s_fwd) {
      s_fwd = s;
      k_fwd = k;
    } else if (s < 0.0 && -s < s_bwd) {
      s_bwd = -s;
      k_bwd = k;
    }
  };

  // The domain is open, so any boundary point met along the line (a crossing,
  // a touch at a vertex, or an overlapping edge) ends the component.
  for (std::size_t k = 0; k < n; ++k) {
    const Point2 a = v[k];
    const Vec2 e = v[(k + 1) % n] - a;
    const double denom = cross(u, e);
    const Vec2 ap = a - p;
    if (std::abs(denom) <= 1e-15 * norm(e)) {
      if (std::abs(cross(ap, u)) <= 1e-12 * (1.0 + norm(ap))) {
        record(dot(ap, u), k);
        record(dot(ap + e, u), k);
      }
      continue;
    }
    const double s = cross(ap, e) / denom;
    const double w = cross(ap, u) / denom;
    if (w >= -1e-12 && w <= 1.0 + 1e-12) record(s, k);
  }
  Chord c;
  c.through = p;
  c.direction = theta;
  c.a = p - s_bwd * u;
  c.b = p + s_fwd * u;
  c.length = s_fwd + s_bwd;
  c.edge_a = k_bwd;
  c.edge_b = k_fwd;
  return c;
}

Chord chord_through(const SampledConvexDomain& domain, Point2 p, DirectionAngle theta) {
  return chord_through(domain.polygon(), p, theta);
}

Chord chord_through(const Domain& domain, Point2 p, DirectionAngle theta) {
  return std::visit([&](const auto& d) { return chord_through(d, p, theta); }, domain);
}

}  // namespace inaccess
