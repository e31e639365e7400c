#pragma once

#include <cstddef>
#include <limits>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "inaccess/geometry.hpp"

namespace inaccess {

/// Points closer than this to the boundary are rejected by chord and r evaluation.
inline constexpr double kBoundaryBand = 1e-12;
/// Vertices closer than this are treated as duplicates.
inline constexpr double kDuplicateTolerance = 1e-12;
inline constexpr std::size_t kNoEdge = std::numeric_limits<std::size_t>::max();

/// Strictly convex, counterclockwise vertex chain. Edge k runs from vertex k to
/// vertex k+1; its outward unit normal and line offset are precomputed.
class ConvexPolygon {
 public:
  /// Validates and, when the input is clockwise, reverses the chain.
  static ConvexPolygon from_vertices(std::vector<Point2> vertices);

  std::span<const Point2> vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  Point2 vertex(std::size_t k) const { return vertices_[k % vertices_.size()]; }
  Point2 edge_start(std::size_t k) const { return vertex(k); }
  Point2 edge_end(std::size_t k) const { return vertex(k + 1); }
  Vec2 normal(std::size_t k) const { return normals_[k]; }
  /// dot(x, normal(k)) == offset(k) on the line through edge k.
  double offset(std::size_t k) const { return offsets_[k]; }
  Line2 edge_line(std::size_t k) const { return {edge_start(k), edge_end(k) - edge_start(k)}; }

  /// Signed distance to the boundary: positive inside, negative outside.
  double boundary_distance(Point2 p) const;
  bool contains(Point2 p) const { return boundary_distance(p) > 0.0; }

  double diameter() const { return diameter_; }
  const BoundingBox& bounds() const { return bounds_; }
  double area() const { return signed_area(vertices_); }
  Point2 centroid() const { return area_centroid(vertices_); }

 private:
  explicit ConvexPolygon(std::vector<Point2> vertices);

  std::vector<Point2> vertices_;
  std::vector<Vec2> normals_;
  std::vector<double> offsets_;
  double diameter_ = 0.0;
  BoundingBox bounds_{};
};

/// Counterclockwise simple (possibly non-convex) polygon.
class SimplePolygon {
 public:
  static SimplePolygon from_vertices(std::vector<Point2> vertices);

  std::span<const Point2> vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  Point2 vertex(std::size_t k) const { return vertices_[k % vertices_.size()]; }
  /// Unsigned distance from p to the nearest edge.
  double boundary_distance(Point2 p) const;
  bool contains(Point2 p) const;
  const BoundingBox& bounds() const { return bounds_; }

 private:
  explicit SimplePolygon(std::vector<Point2> vertices);

  std::vector<Point2> vertices_;
  BoundingBox bounds_{};
};

/// What a sampled boundary approximates.
struct SampleSource {
  enum class Shape { Ellipse, Semicircle, Points };
  Shape shape = Shape::Points;
  double a = 0.0;  ///< ellipse semi-axis along x, or semicircle radius
  double b = 0.0;  ///< ellipse semi-axis along y
  std::size_t count = 0;
};

inline constexpr std::size_t kDefaultSampleCount = 4096;
inline constexpr std::size_t kMinSampleCount = 64;

/// Dense convex polyline standing in for a smooth convex boundary.
class SampledConvexDomain {
 public:
  /// Ellipse x^2/a^2 + y^2/b^2 < 1 sampled at equal parameter steps starting at (a, 0).
  static SampledConvexDomain ellipse(double a, double b, std::size_t count = kDefaultSampleCount);
  /// Half disk {x^2 + y^2 < radius^2, x > 0}; the diameter is a single edge.
  static SampledConvexDomain semicircle(double radius, std::size_t count = kDefaultSampleCount);
  static SampledConvexDomain from_boundary(std::vector<Point2> boundary);

  const ConvexPolygon& polygon() const { return polygon_; }
  const SampleSource& source() const { return source_; }

 private:
  SampledConvexDomain(ConvexPolygon polygon, SampleSource source)
      : polygon_(std::move(polygon)), source_(source) {}

  ConvexPolygon polygon_;
  SampleSource source_;
};

using Domain = std::variant<ConvexPolygon, SimplePolygon, SampledConvexDomain>;

enum class DomainKind { Convex, Simple, Sampled };

/// Validates a raw vertex list; diagnostics are thrown as Error.
Domain validate(std::vector<Point2> raw, DomainKind kind);

/// Convex view of a domain, or nullptr for a non-convex simple polygon.
const ConvexPolygon* as_convex(const Domain& domain);

/// Maximal segment through `through` in a direction, clipped to the
/// component of the domain containing the point. Endpoint a has the smaller
/// line parameter (a = through - t * unit, b = through + t' * unit).
struct Chord {
  Point2 through;
  DirectionAngle direction;
  Point2 a;
  Point2 b;
  double length = 0.0;
  std::size_t edge_a = kNoEdge;
  std::size_t edge_b = kNoEdge;
};

// A ray that leaves a convex polygon exactly through vertex k is attributed to
// edge k, the edge it reaches under a small counterclockwise rotation.
Chord chord_through(const ConvexPolygon& domain, Point2 p, DirectionAngle theta);
Chord chord_through(const SimplePolygon& domain, Point2 p, DirectionAngle theta);
Chord chord_through(const SampledConvexDomain& domain, Point2 p, DirectionAngle theta);
Chord chord_through(const Domain& domain, Point2 p, DirectionAngle theta);

/// Throws PointOutside / PointTooCloseToBoundary unless p is safely interior.
void require_interior(const ConvexPolygon& domain, Point2 p);
void require_interior(const SimplePolygon& domain, Point2 p);

}  // namespace inaccess
