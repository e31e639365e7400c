#include <algorithm>
#include <cmath>
#include <random>

#include "doctest.h"
#include "inaccess/error.hpp"
#include "inaccess/inaccessibility.hpp"
#include "inaccess/levelsets.hpp"
#include "support.hpp"

using namespace inaccess;
using testing::kPi;
using testing::kSqrt3;

namespace {

void check_convex(const std::vector<Point2>& pts, double tol) {
  const std::size_t m = pts.size();
  for (std::size_t k = 0; k < m; ++k) {
    const Point2 a = pts[k];
    const Point2 b = pts[(k + 1) % m];
    const Point2 c = pts[(k + 2) % m];
    CHECK(cross(b - a, c - b) >= -tol);
  }
}

double curve_diameter(const std::vector<Point2>& pts) { return diameter(pts); }

std::size_t count_kind(const LevelSet& ls, ArcKind kind) {
  return static_cast<std::size_t>(
      std::count_if(ls.arcs.begin(), ls.arcs.end(), [kind](const ArcPiece& a) { return a.kind == kind; }));
}

void check_r_values(const ConvexPolygon& domain, const LevelSet& ls, double tol) {
  for (const ContourSample& s : ls.contour) {
    if (s.on_boundary) {
      CHECK(std::abs(domain.boundary_distance(s.point)) <= 1e-9);
      continue;
    }
    CHECK(std::abs(inaccessibility(domain, s.point) - ls.r) <= tol);
  }
}

void check_arc_fidelity(const LevelSet& ls) {
  const std::size_t m = ls.contour.size();
  for (const ArcPiece& arc : ls.arcs) {
    if (arc.kind != ArcKind::Bow) continue;
    REQUIRE(arc.bow.has_value());
    // Every labeled sample lies on its exact bow.
    for (std::size_t j = arc.first_sample;; j = (j + 1) % m) {
      const Point2 q = ls.contour[j].point;
      const ThetaRange tr = arc.bow->theta_range;
      auto dist = [&](double t) { return distance(q, bow_world(*arc.bow, std::clamp(t, tr.lo, tr.hi))); };
      const double step = (tr.hi - tr.lo) / 400.0;
      double t_best = tr.lo;
      for (int k = 0; k <= 400; ++k) {
        if (dist(tr.lo + step * k) < dist(t_best)) t_best = tr.lo + step * k;
      }
      double lo = std::max(tr.lo, t_best - step), hi = std::min(tr.hi, t_best + step);
      for (int it = 0; it < 100; ++it) {
        const double m1 = lo + (hi - lo) / 3, m2 = hi - (hi - lo) / 3;
        (dist(m1) < dist(m2) ? hi : lo) = (dist(m1) < dist(m2) ? m2 : m1);
      }
      CHECK(dist(0.5 * (lo + hi)) <= 1e-5);
      if (j == arc.last_sample) break;
    }
  }
  // Consecutive arcs meet.
  for (std::size_t i = 0; i < ls.arcs.size(); ++i) {
    const ArcPiece& a = ls.arcs[i];
    const ArcPiece& b = ls.arcs[(i + 1) % ls.arcs.size()];
    CHECK(distance(a.end, b.start) <= 1e-6);
  }
}

}  // namespace

TEST_SUITE("levelsets") {
  TEST_CASE("square at r = 0.5") {
    const auto sq = testing::unit_square();
    const LevelSet ls = contour(sq, 0.5);
    CHECK(ls.contour.size() == 512);
    check_r_values(sq, ls, 1e-6);
    check_convex(ls.points(), 1e-9);
  }

  TEST_CASE("square at r = 0.9 has four astroid arcs") {
    const auto sq = testing::unit_square();
    const LevelSet ls = level_set(sq, 0.9);
    CHECK(count_kind(ls, ArcKind::Bow) == 4);
    for (const ArcPiece& a : ls.arcs) {
      if (a.kind == ArcKind::Bow) CHECK(a.bow->frame.lambda == doctest::Approx(0.0).epsilon(1e-12));
    }
    check_arc_fidelity(ls);
    check_r_values(sq, ls, 1e-6);
  }

  TEST_CASE("triangle at small r: three bows and three boundary segments") {
    const auto tri = testing::equilateral();
    const LevelSet ls = level_set(tri, 0.2);
    CHECK(count_kind(ls, ArcKind::Bow) == 3);
    CHECK(count_kind(ls, ArcKind::BoundarySegment) == 3);
    check_arc_fidelity(ls);
    for (const ArcPiece& a : ls.arcs) {
      if (a.kind == ArcKind::Bow) CHECK(a.bow->frame.lambda == doctest::Approx(1 / kSqrt3));
    }
  }

  TEST_CASE("equilateral contour collapses near R") {
    const auto tri = testing::equilateral();
    const double R = 4 / (3 * kSqrt3);
    const LevelSet ls = level_set(tri, R - 1e-6);
    CHECK(curve_diameter(ls.points()) <= 1e-3);
    CHECK(distance(ls.anchor, {1 / kSqrt3, 1.0 / 3}) <= 1e-6);
    // Arcs from all three vertex sectors.
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (const ArcPiece& a : ls.arcs) {
      CHECK(a.kind == ArcKind::Bow);
      pairs.push_back(a.edge_pair);
    }
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    CHECK(pairs.size() == 3);
    for (const ContourSample& s : ls.contour) CHECK(std::abs(inaccessibility(tri, s.point) - (R - 1e-6)) <= 1e-6);
  }

  TEST_CASE("rectangle 3x1 near R touches the boundary") {
    const auto rect = ConvexPolygon::from_vertices({{0, 0}, {3, 0}, {3, 1}, {0, 1}});
    const LevelSet ls = level_set(rect, 1 - 1e-6);
    const bool touches = std::any_of(ls.contour.begin(), ls.contour.end(),
                                     [](const ContourSample& s) { return s.on_boundary; });
    CHECK(touches);
    CHECK(count_kind(ls, ArcKind::BoundarySegment) == 2);
    CHECK(count_kind(ls, ArcKind::Bow) == 4);
    check_r_values(rect, ls, 1e-6);
  }

  TEST_CASE("random polygons: accuracy, convexity, nesting") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 6; ++trial) {
      const auto poly = testing::random_convex(rng);
      const LevelSet hi0 = contour(poly, 0.05);
      const Point2 anchor = hi0.anchor;
      const double R = inaccessibility(poly, anchor);
      const double r1 = 0.4 * R;
      const double r2 = 0.8 * R;
      ContourOptions opts;
      opts.rays = 256;
      const LevelSet l1 = level_set(poly, r1, opts);
      const LevelSet l2 = level_set(poly, r2, opts);
      check_r_values(poly, l1, 1e-6);
      check_r_values(poly, l2, 1e-6);
      check_convex(l1.points(), 1e-9);
      check_convex(l2.points(), 1e-9);
      check_arc_fidelity(l1);
      check_arc_fidelity(l2);
      const auto outer = l1.points();
      for (Point2 q : l2.points()) {
        for (std::size_t k = 0; k < outer.size(); ++k) {
          CHECK(cross(outer[(k + 1) % outer.size()] - outer[k], q - outer[k]) >= -1e-8);
        }
      }
    }
  }

  TEST_CASE("strict convexity away from the boundary") {
    const auto tri = testing::equilateral();
    const LevelSet ls = level_set(tri, 0.6);
    const auto pts = ls.points();
    for (std::size_t k = 0; k < pts.size(); ++k) {
      if (ls.contour[k].on_boundary || ls.contour[(k + 1) % pts.size()].on_boundary ||
          ls.contour[(k + 2) % pts.size()].on_boundary) {
        continue;
      }
      const Point2 a = pts[k];
      const Point2 b = pts[(k + 1) % pts.size()];
      const Point2 c = pts[(k + 2) % pts.size()];
      // Height of the middle sample above the chord of its neighbours.
      CHECK(cross(b - a, c - b) / distance(a, c) > 1e-9);
    }
  }

  TEST_CASE("sampled ellipse contour") {
    const auto e = SampledConvexDomain::ellipse(2, 1, 1024);
    ContourOptions opts;
    opts.rays = 64;
    const LevelSet ls = contour(e, 1.5, opts);
    check_r_values(e.polygon(), ls, 1e-6);
    check_convex(ls.points(), 1e-9);
  }

  TEST_CASE("errors") {
    const auto sq = testing::unit_square();
    auto code = [](auto&& fn) {
      try {
        fn();
      } catch (const Error& e) {
        return e.code();
      }
      return ErrorCode::ParseError;
    };
    CHECK(code([&] { contour(sq, 1.0); }) == ErrorCode::EmptyLevelSet);
    CHECK(code([&] { contour(sq, 1.5); }) == ErrorCode::EmptyLevelSet);
    CHECK(code([&] { contour(sq, 0.0); }) == ErrorCode::InvalidArgument);
    ContourOptions opts;
    opts.anchor = Point2{0.05, 0.05};
    CHECK(code([&] { contour(sq, 0.5, opts); }) == ErrorCode::AnchorNotFound);
  }
}
