#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "inaccess/domains.hpp"
#include "inaccess/error.hpp"

namespace testing {

using inaccess::ConvexPolygon;
using inaccess::Point2;

inline const double kSqrt3 = std::sqrt(3.0);
inline constexpr double kPi = std::numbers::pi;

inline ConvexPolygon equilateral() {
  return ConvexPolygon::from_vertices({{0.0, 0.0}, {2.0 / kSqrt3, 0.0}, {1.0 / kSqrt3, 1.0}});
}

inline ConvexPolygon unit_square() {
  return ConvexPolygon::from_vertices({{0.0, 0.0}, {1.0, 0.0}, {1.0, 1.0}, {0.0, 1.0}});
}

// Hull of jittered points on a circle, rescaled to unit diameter.
inline ConvexPolygon random_convex(std::mt19937_64& rng, std::size_t min_vertices = 5,
                                   std::size_t max_vertices = 12) {
  std::uniform_int_distribution<std::size_t> count(min_vertices, max_vertices);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (;;) {
    const std::size_t n = count(rng);
    std::vector<double> angles(n);
    for (double& a : angles) a = 2.0 * kPi * unit(rng);
    std::sort(angles.begin(), angles.end());
    std::vector<Point2> pts;
    for (double a : angles) {
      const double rad = 0.7 + 0.3 * unit(rng);
      pts.push_back({rad * std::cos(a), rad * std::sin(a)});
    }
    std::vector<Point2> hull = inaccess::convex_hull(pts);
    if (hull.size() != n) continue;
    const double d = inaccess::diameter(hull);
    for (Point2& p : hull) p = p / d;
    try {
      ConvexPolygon poly = ConvexPolygon::from_vertices(hull);
      return poly;
    } catch (const inaccess::Error&) {
    }
  }
}

inline bool has_parallel_sides(const ConvexPolygon& poly, double tolerance = 1e-6) {
  for (std::size_t i = 0; i < poly.size(); ++i) {
    for (std::size_t j = i + 1; j < poly.size(); ++j) {
      if (std::abs(inaccess::cross(poly.normal(i), poly.normal(j))) < tolerance &&
          inaccess::dot(poly.normal(i), poly.normal(j)) < 0.0) {
        return true;
      }
    }
  }
  return false;
}

// Uniform point of the polygon at least `margin` away from its boundary.
inline Point2 random_interior(std::mt19937_64& rng, const ConvexPolygon& poly, double margin = 1e-6) {
  const auto box = poly.bounds();
  std::uniform_real_distribution<double> ux(box.min.x, box.max.x);
  std::uniform_real_distribution<double> uy(box.min.y, box.max.y);
  for (;;) {
    const Point2 p{ux(rng), uy(rng)};
    if (poly.boundary_distance(p) > margin) return p;
  }
}

inline Point2 random_in(std::mt19937_64& rng, const std::vector<Point2>& convex, double margin) {
  const auto box = inaccess::bounding_box(convex);
  std::uniform_real_distribution<double> ux(box.min.x, box.max.x);
  std::uniform_real_distribution<double> uy(box.min.y, box.max.y);
  const std::size_t n = convex.size();
  for (int attempt = 0; attempt < 100000; ++attempt) {
    const Point2 p{ux(rng), uy(rng)};
    bool inside = true;
    for (std::size_t k = 0; k < n && inside; ++k) {
      inside = inaccess::cross(convex[(k + 1) % n] - convex[k], p - convex[k]) > margin;
    }
    if (inside) return p;
  }
  return inaccess::area_centroid(convex);
}

}  // namespace testing
