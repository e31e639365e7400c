#include <cmath>
#include <numbers>

#include "doctest.h"
#include "inaccess/analytic.hpp"
#include "inaccess/error.hpp"
#include "inaccess/inaccessibility.hpp"
#include "inaccess/optimizer.hpp"
#include "support.hpp"

using namespace inaccess;
using testing::kPi;
using testing::kSqrt3;

namespace {

// Closed-form height of the maximizer, independent of the 1 - R/(2 lambda) route.
double height_closed_form(double lambda, double theta) {
  const double s = std::sin(theta);
  const double c = std::cos(theta);
  const double R = isosceles_R(lambda, theta);
  return R * (s * s * s - lambda * s * s * c);
}

struct Row {
  double lambda, theta, R, height;
};

// Frozen after an independent check: bisection in Python on the stationarity
// condition plus a dense chord sweep at the predicted point.
const Row kTable[] = {
    {0.3, 0.8640669436876354, 0.5015479339159125, 0.1640867768068125},
    {0.5, 0.9992848987688401, 0.7124138480106244, 0.28758615198937565},
    {1 / std::numbers::sqrt3, std::numbers::pi / 3, 4 / (3 * std::numbers::sqrt3), 1.0 / 3},
    {1.0, 1.2519966649711645, 0.9313685668379408, 0.5343157165810296},
    {2.0, 1.4572216952483932, 0.99300309010937, 0.7517492274726575},
};

}  // namespace

TEST_SUITE("analytic") {
  TEST_CASE("isosceles table") {
    for (const Row& row : kTable) {
      CAPTURE(row.lambda);
      const IsoscelesSolution s = isosceles_solve(row.lambda);
      CHECK(std::abs(s.theta - row.theta) <= 1e-12);
      CHECK(std::abs(s.R - row.R) <= 1e-12);
      CHECK(std::abs(s.height - row.height) <= 1e-12);
      CHECK(s.point.x == row.lambda);
      CHECK(s.roots >= 1);
      CHECK(std::abs(isosceles_residual(s.lambda, s.theta)) <= 1e-12);
      CHECK(std::abs(isosceles_lambda(s.theta) - s.lambda) <= 1e-12);
      CHECK(std::abs((1 - s.R / (2 * s.lambda)) - isosceles_height(s.lambda, s.theta)) <= 1e-10);
      CHECK(std::abs(s.height - height_closed_form(s.lambda, s.theta)) <= 1e-10);
      CHECK(std::abs(inaccessibility(isosceles_triangle(s.lambda), s.point) - s.R) <= 1e-9);
    }
  }

  TEST_CASE("isosceles agrees with the optimizer") {
    for (const Row& row : kTable) {
      CAPTURE(row.lambda);
      const MaxResult m = maximize(isosceles_triangle(row.lambda));
      CHECK(std::abs(m.R - row.R) <= 1e-6);
      CHECK(std::abs(m.point.x - row.lambda) <= 1e-6);
      CHECK(std::abs(m.point.y - row.height) <= 1e-6);
    }
  }

  TEST_CASE("asymptotic constant") {
    const IsoscelesSolution s = isosceles_solve(1e-3);
    const double constant = std::pow(std::pow(2.0, 2.0 / 3) - 1, 1.5);
    CHECK(constant == doctest::Approx(0.45020).epsilon(1e-4));
    CHECK(std::abs(s.height / s.lambda - constant) <= 1e-2);
  }

  TEST_CASE("invalid lambda") {
    CHECK_THROWS_AS(isosceles_solve(0.0), Error);
    CHECK_THROWS_AS(isosceles_solve(-1.0), Error);
  }

  TEST_CASE("notable points") {
    const NotablePoints one = notable_points(1.0);
    CHECK(distance(one.H, {1, 1}) <= 1e-15);
    CHECK(distance(one.I, {1, std::sqrt(2.0) - 1}) <= 1e-15);
    CHECK(distance(one.G, {1, 1.0 / 3}) <= 1e-15);
    CHECK(distance(one.O, {1, 0}) <= 1e-15);
    CHECK(notable_points(0.5).O.y == doctest::Approx(0.375));

    const double eq = 1 / kSqrt3;
    const NotablePoints e = notable_points(eq);
    CHECK(distance(e.G, isosceles_solve(eq).point) <= 1e-9);

    for (double lambda : {0.4, 0.8, 1.2}) {
      const NotablePoints p = notable_points(lambda);
      const Point2 pts[] = {p.H, p.I, p.G, p.O, isosceles_solve(lambda).point};
      for (int i = 0; i < 5; ++i) {
        CHECK(pts[i].x == lambda);
        for (int j = i + 1; j < 5; ++j) CHECK(distance(pts[i], pts[j]) > 1e-6);
      }
    }
    // Incentre and circumcentre against generic triangle formulas.
    const double lambda = 0.8;
    const Point2 A{0, 0}, B{2 * lambda, 0}, C{lambda, 1};
    const double a = distance(B, C), b = distance(A, C), c = distance(A, B);
    const Point2 incentre = (a * A + b * B + c * C) / (a + b + c);
    CHECK(distance(notable_points(lambda).I, incentre) <= 1e-12);
    const Point2 O = notable_points(lambda).O;
    CHECK(std::abs(distance(O, A) - distance(O, C)) <= 1e-12);
  }

  TEST_CASE("rectangle solution") {
    const RectangleSolution sq = rectangle_solution(1, 1);
    CHECK(sq.R == 1.0);
    CHECK(!sq.boundary_contact);
    CHECK(sq.contact_segments.empty());
    const RectangleSolution two = rectangle_solution(2, 1);
    CHECK(two.boundary_contact);
    const RectangleSolution three = rectangle_solution(3, 1);
    CHECK(three.R == 1.0);
    CHECK(three.boundary_contact);
    CHECK(three.contact_segments.size() == 2);
    CHECK(three.in_region({1.5, 0.5}, 3, 1));
    CHECK(three.in_region({0.3, 0.5}, 3, 1));
    CHECK(!three.in_region({0.2, 0.5}, 3, 1));
    CHECK(!sq.in_region({0.2, 0.5}, 1, 1));
    // Region membership agrees with r on a grid.
    const auto poly = rectangle(3, 1);
    for (int i = 1; i < 30; ++i) {
      for (int j = 1; j < 10; ++j) {
        const Point2 p{0.1 * i, 0.1 * j};
        const double r = inaccessibility(poly, p);
        if (r > 1 - 1e-12) CHECK(three.in_region(p, 3, 1));
        if (r < 1 - 1e-6) CHECK(!three.in_region(p, 3, 1));
      }
    }
    for (const BowArc& bow : three.corner_bows) CHECK(bow.frame.lambda == doctest::Approx(0.0).epsilon(1e-12));
  }

  TEST_CASE("ellipse solution and chord formula") {
    const EllipseSolution e = ellipse_solution(2, 1);
    CHECK(e.R == 2.0);
    CHECK(e.y0 == doctest::Approx(std::sqrt(3.0) / 2).epsilon(1e-15));
    CHECK(e.upper.y == doctest::Approx(0.866025).epsilon(1e-6));
    CHECK(e.lower.y == -e.upper.y);
    CHECK(std::abs(ellipse_chord_length(2, 1, 0.9, 0.0) - 1.743559577416269) <= 1e-12);
    CHECK(ellipse_min_chord(2, 1, 0.9) < 2.0);
    CHECK(ellipse_min_chord(2, 1, 0.5) == doctest::Approx(2.0));
    // The formula parametrizes the direction as (a cos t, b sin t): compare
    // with the chord of the ellipse through (0, y) found by solving the quadratic.
    for (double y : {0.0, 0.3, 0.8}) {
      for (double t : {0.2, 0.7, 1.3}) {
        const double dx = 2 * std::cos(t), dy = std::sin(t);
        const double qa = dx * dx / 4 + dy * dy;
        const double qb = 2 * y * dy;
        const double qc = y * y - 1;
        const double span = std::sqrt(qb * qb - 4 * qa * qc) / qa;
        CHECK(std::abs(ellipse_chord_length(2, 1, y, t) - span * std::hypot(dx, dy)) <= 1e-12);
      }
    }
    try {
      ellipse_solution(1, 1);
      FAIL("expected DegenerateCircle");
    } catch (const Error& err) {
      CHECK(err.code() == ErrorCode::DegenerateCircle);
    }
    // The segment shrinks to the center as the ellipse becomes a circle.
    CHECK(ellipse_solution(1 + 1e-12, 1).y0 <= 2e-6);
  }

  TEST_CASE("trapezoid pair") {
    const TrapezoidPair t = trapezoid_pair(10, 0.1);
    CHECK(std::abs(t.predicted.x - (10 - 0.4502)) <= 1e-2);
    CHECK(t.predicted.y == 0.0);
    CHECK(t.predicted_mirrored.x == -t.predicted.x);
    CHECK(distance(t.predicted, t.predicted_mirrored) > 19);
    CHECK(std::abs(inaccessibility(t.trapezoid, t.predicted) - t.R) <= 1e-9);
    CHECK(std::abs(inaccessibility(t.mirrored, t.predicted_mirrored) - t.R) <= 1e-9);
    try {
      trapezoid_pair(0.5, 0.1);
      FAIL("expected InvalidShape");
    } catch (const Error& err) {
      CHECK(err.code() == ErrorCode::InvalidShape);
    }
    CHECK_THROWS_AS(trapezoid_pair(10, 1.0), Error);
  }
}
