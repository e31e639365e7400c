#include <cmath>
#include <random>

#include "doctest.h"
#include "inaccess/domains.hpp"
#include "inaccess/error.hpp"
#include "support.hpp"

using namespace inaccess;
using testing::kPi;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::InvalidArgument;
}

// Left half disk of radius 1 glued to the right half disk of radius 2 along x = 0.
SimplePolygon two_half_disks(std::size_t per_arc) {
  std::vector<Point2> v;
  for (std::size_t k = 0; k <= per_arc; ++k) {
    const double t = -0.5 * kPi + kPi * static_cast<double>(k) / static_cast<double>(per_arc);
    v.push_back({2.0 * std::cos(t), 2.0 * std::sin(t)});
  }
  for (std::size_t k = 0; k <= per_arc; ++k) {
    const double t = 0.5 * kPi + kPi * static_cast<double>(k) / static_cast<double>(per_arc);
    v.push_back({std::cos(t), std::sin(t)});
  }
  v.front() = {0.0, -2.0};
  v[per_arc] = {0.0, 2.0};
  v[per_arc + 1] = {0.0, 1.0};
  v.back() = {0.0, -1.0};
  return SimplePolygon::from_vertices(std::move(v));
}

}  // namespace

TEST_SUITE("domains") {
  TEST_CASE("square validates and keeps counterclockwise order") {
    const Domain d = validate({{0, 0}, {1, 0}, {1, 1}, {0, 1}}, DomainKind::Convex);
    const auto& sq = std::get<ConvexPolygon>(d);
    CHECK(sq.size() == 4);
    CHECK(sq.area() == doctest::Approx(1.0));
    CHECK(sq.vertex(1) == Point2{1, 0});
  }

  TEST_CASE("clockwise input is reversed") {
    const auto poly = ConvexPolygon::from_vertices({{0, 0}, {0, 1}, {1, 1}, {1, 0}});
    CHECK(poly.area() > 0.0);
    for (std::size_t k = 0; k < poly.size(); ++k) {
      CHECK(cross(poly.edge_end(k) - poly.edge_start(k), poly.edge_end(k + 1) - poly.edge_end(k)) > 0.0);
    }
  }

  TEST_CASE("collinear triple is rejected with its indices") {
    try {
      validate({{0, 0}, {1, 0}, {2, 0}, {1, 1}}, DomainKind::Convex);
      FAIL("expected NotConvex");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NotConvex);
      CHECK(e.indices() == std::vector<std::size_t>{0, 1, 2});
    }
  }

  TEST_CASE("bow-tie is self-intersecting") {
    CHECK(code_of([] { validate({{0, 0}, {1, 1}, {1, 0}, {0, 1}}, DomainKind::Simple); }) ==
          ErrorCode::SelfIntersecting);
  }

  TEST_CASE("other validation failures") {
    CHECK(code_of([] { validate({{0, 0}, {1, 0}}, DomainKind::Convex); }) == ErrorCode::TooFewVertices);
    CHECK(code_of([] { validate({{0, 0}, {1, 0}, {1, 0}, {0, 1}}, DomainKind::Convex); }) ==
          ErrorCode::DegenerateEdge);
    CHECK(code_of([] { validate({{0, 0}, {1, NAN}, {0, 1}}, DomainKind::Convex); }) ==
          ErrorCode::NonFiniteCoordinate);
    CHECK(code_of([] { validate({{0, 0}, {2, 0}, {1, 0.2}, {2, 1}, {0, 1}}, DomainKind::Convex); }) ==
          ErrorCode::NotConvex);
    CHECK(code_of([] { SampledConvexDomain::ellipse(2, 1, 32); }) == ErrorCode::InvalidArgument);
  }

  TEST_CASE("axis and diagonal chords of the square") {
    const auto sq = testing::unit_square();
    const Chord h = chord_through(sq, {0.5, 0.5}, DirectionAngle(0.0));
    CHECK(h.length == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(h.a.x == doctest::Approx(0.0));
    CHECK(h.a.y == doctest::Approx(0.5));
    CHECK(h.b.x == doctest::Approx(1.0));
    CHECK(h.b.y == doctest::Approx(0.5));
    const Chord d = chord_through(sq, {0.5, 0.5}, DirectionAngle(kPi / 4));
    CHECK(d.length == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
  }

  TEST_CASE("direction angles are normalized to [0, pi)") {
    CHECK(DirectionAngle(kPi).radians() == doctest::Approx(0.0));
    CHECK(DirectionAngle(-kPi / 4).radians() == doctest::Approx(3 * kPi / 4));
    const auto sq = testing::unit_square();
    const Chord c1 = chord_through(sq, {0.3, 0.6}, DirectionAngle(0.7));
    const Chord c2 = chord_through(sq, {0.3, 0.6}, DirectionAngle(0.7 + kPi));
    CHECK(distance(c1.a, c2.a) <= 1e-12);
    CHECK(distance(c1.b, c2.b) <= 1e-12);
  }

  TEST_CASE("chord invariants on random polygons") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> angle(0.0, kPi);
    for (int trial = 0; trial < 50; ++trial) {
      const auto poly = testing::random_convex(rng);
      const Point2 p = testing::random_interior(rng, poly, 1e-3);
      const Chord c = chord_through(poly, p, DirectionAngle(angle(rng)));
      CHECK(std::abs(poly.boundary_distance(c.a)) <= 1e-9);
      CHECK(std::abs(poly.boundary_distance(c.b)) <= 1e-9);
      CHECK(std::abs(distance(c.a, p) + distance(p, c.b) - c.length) <= 1e-12);
      CHECK(std::abs(distance(c.a, c.b) - c.length) <= 1e-12);
      CHECK(c.edge_a < poly.size());
      CHECK(c.edge_b < poly.size());
    }
  }

  TEST_CASE("chords are equivariant under isometries and scaling") {
    std::mt19937_64 rng(12);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int trial = 0; trial < 30; ++trial) {
      const auto poly = testing::random_convex(rng);
      const Point2 p = testing::random_interior(rng, poly, 1e-3);
      const double theta = kPi * unit(rng);
      const Isometry t{2 * kPi * unit(rng), {5 * unit(rng) - 2.5, 5 * unit(rng) - 2.5}, false};
      std::vector<Point2> moved;
      for (Point2 v : poly.vertices()) moved.push_back(t.apply(v));
      const auto image = ConvexPolygon::from_vertices(moved);
      const Chord c = chord_through(poly, p, DirectionAngle(theta));
      const Chord m = chord_through(image, t.apply(p), DirectionAngle(theta + t.angle));
      CHECK(std::abs(m.length - c.length) <= 1e-9);
      const double e1 = distance(m.a, t.apply(c.a)) + distance(m.b, t.apply(c.b));
      const double e2 = distance(m.a, t.apply(c.b)) + distance(m.b, t.apply(c.a));
      CHECK(std::min(e1, e2) <= 2e-9);

      const double s = 0.1 + 10 * unit(rng);
      std::vector<Point2> scaled;
      for (Point2 v : poly.vertices()) scaled.push_back(s * v);
      const Chord sc = chord_through(ConvexPolygon::from_vertices(scaled), s * p, DirectionAngle(theta));
      CHECK(std::abs(sc.length - s * c.length) <= 1e-9 * s);
    }
  }

  TEST_CASE("containment monotonicity") {
    const auto inner = ConvexPolygon::from_vertices({{0.1, 0.1}, {0.9, 0.2}, {0.8, 0.9}, {0.2, 0.7}});
    const auto outer = testing::unit_square();
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> angle(0.0, kPi);
    for (int k = 0; k < 200; ++k) {
      const Point2 p = testing::random_interior(rng, inner, 1e-6);
      const DirectionAngle th(angle(rng));
      CHECK(chord_through(inner, p, th).length <= chord_through(outer, p, th).length + 1e-9);
    }
  }

  TEST_CASE("interior requirements") {
    const auto sq = testing::unit_square();
    CHECK(code_of([&] { chord_through(sq, {2, 0.5}, DirectionAngle(0.0)); }) == ErrorCode::PointOutside);
    CHECK(code_of([&] { chord_through(sq, {0.5, 0.0}, DirectionAngle(0.0)); }) ==
          ErrorCode::PointTooCloseToBoundary);
    CHECK(code_of([&] { chord_through(sq, {0.5, 1e-13}, DirectionAngle(0.0)); }) ==
          ErrorCode::PointTooCloseToBoundary);
  }

  TEST_CASE("non-convex chord is the component through the point") {
    // U shape: the horizontal line y = 0.5 crosses both prongs.
    const auto u = SimplePolygon::from_vertices({{0, 0}, {3, 0}, {3, 1}, {2, 1}, {2, 0.4}, {1, 0.4}, {1, 1}, {0, 1}});
    const Chord c = chord_through(u, {0.5, 0.7}, DirectionAngle(0.0));
    CHECK(c.length == doctest::Approx(1.0));
    CHECK(c.a.x == doctest::Approx(0.0));
    CHECK(c.b.x == doctest::Approx(1.0));
    const Chord low = chord_through(u, {1.5, 0.2}, DirectionAngle(0.0));
    CHECK(low.length == doctest::Approx(3.0));
  }

  // Convention: the chord stops where the line runs along the boundary, so the
  // vertical line through the seam point keeps only the open glued part.
  TEST_CASE("two half disks: value 2 along the seam, 3 elsewhere (convention-dependent)") {
    const SimplePolygon d = two_half_disks(512);
    const Point2 p{0.0, 0.0};
    CHECK(chord_through(d, p, DirectionAngle(kPi / 2)).length == doctest::Approx(2.0).epsilon(1e-12));
    for (double th : {0.0, 0.3, 1.0, 2.0, 2.9}) {
      CHECK(std::abs(chord_through(d, p, DirectionAngle(th)).length - 3.0) <= 1e-2);
    }
    // Independent sweep: collect every edge crossing of the line and keep the
    // interval around p.
    auto sweep = [&](double th) {
      const Vec2 u = unit_vector(th);
      std::vector<double> ts;
      const auto v = d.vertices();
      for (std::size_t k = 0; k < v.size(); ++k) {
        const Point2 a = v[k];
        const Point2 b = v[(k + 1) % v.size()];
        const double den = cross(u, b - a);
        if (den == 0.0) continue;
        const double s = cross(u, p - a) / den;
        if (s < 0.0 || s > 1.0) continue;
        ts.push_back(cross(a - p, b - a) / cross(u, b - a));
      }
      double lo = -1e300, hi = 1e300;
      for (double t : ts) {
        if (t < -1e-12) lo = std::max(lo, t);
        if (t > 1e-12) hi = std::min(hi, t);
      }
      return hi - lo;
    };
    for (double th : {0.0, 0.3, 1.0, 2.0, 2.9}) {
      CHECK(std::abs(chord_through(d, p, DirectionAngle(th)).length - sweep(th)) <= 1e-9);
    }
  }

  TEST_CASE("sampled ellipse and semicircle") {
    const auto e = SampledConvexDomain::ellipse(2, 1);
    CHECK(e.polygon().size() == kDefaultSampleCount);
    CHECK(e.source().shape == SampleSource::Shape::Ellipse);
    CHECK(chord_through(e, {0, 0}, DirectionAngle(0.0)).length == doctest::Approx(4.0));
    const auto s = SampledConvexDomain::semicircle(1.0, 256);
    CHECK(chord_through(s, {0.5, 0.0}, DirectionAngle(kPi / 2)).length ==
          doctest::Approx(2 * std::sqrt(0.75)).epsilon(1e-4));
  }
}
