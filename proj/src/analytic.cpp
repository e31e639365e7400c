#include "inaccess/analytic.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "inaccess/error.hpp"
#include "inaccess/inaccessibility.hpp"

namespace inaccess {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr std::size_t kScanPoints = 1024;
constexpr double kRootTolerance = 1e-14;

void require_positive(double value, const char* name) {
  if (!std::isfinite(value) || value <= 0.0) {
    throw Error(ErrorCode::InvalidArgument, std::string(name) + " must be positive and finite");
  }
}

double denominator(double lambda, double theta) {
  const double s = std::sin(theta);
  const double c = std::cos(theta);
  return c * c * c + lambda * (s * s * s + 2.0 * s * c * c);
}

}  // namespace

ConvexPolygon isosceles_triangle(double lambda) {
  require_positive(lambda, "lambda");
  return ConvexPolygon::from_vertices({{0.0, 0.0}, {2.0 * lambda, 0.0}, {lambda, 1.0}});
}

double isosceles_residual(double lambda, double theta) {
  const double s = std::sin(theta);
  const double c = std::cos(theta);
  return lambda * lambda * s * s * c + 2.0 * lambda * s * c * c + c * c * c - 0.5;
}

double isosceles_lambda(double theta) {
  const double s = std::sin(theta);
  const double c = std::cos(theta);
  return (-2.0 * c * c + std::sqrt(2.0 * c)) / (2.0 * s * c);
}

double isosceles_R(double lambda, double theta) { return lambda / denominator(lambda, theta); }

double isosceles_height(double lambda, double theta) {
  const double s = std::sin(theta);
  const double c = std::cos(theta);
  return lambda * (s * s * s - lambda * s * s * c) / denominator(lambda, theta);
}

IsoscelesSolution isosceles_solve(double lambda) {
  require_positive(lambda, "lambda");
  const ConvexPolygon triangle = isosceles_triangle(lambda);
  auto g = [lambda](double t) { return isosceles_residual(lambda, t); };

  std::vector<double> roots;
  double prev_t = 0.0;
  double prev_g = g(prev_t);
  for (std::size_t i = 1; i <= kScanPoints; ++i) {
    const double t = 0.5 * kPi * static_cast<double>(i) / static_cast<double>(kScanPoints);
    const double gt = g(t);
    if (gt == 0.0) {
      roots.push_back(t);
    } else if ((prev_g < 0.0) != (gt < 0.0) && prev_g != 0.0) {
      double lo = prev_t;
      double hi = t;
      const bool rising = prev_g < 0.0;
      while (hi - lo > kRootTolerance) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        if ((g(mid) < 0.0) == rising) {
          lo = mid;
        } else {
          hi = mid;
        }
      }
      roots.push_back(0.5 * (lo + hi));
    }
    prev_t = t;
    prev_g = gt;
  }

  IsoscelesSolution best;
  best.lambda = lambda;
  best.roots = roots.size();
  std::ostringstream trace;
  trace.precision(17);
  for (double theta : roots) {
    const double R = isosceles_R(lambda, theta);
    const double height = 1.0 - R / (2.0 * lambda);
    const Point2 point{lambda, height};
    trace << " theta=" << theta << " R=" << R;
    if (triangle.boundary_distance(point) < kBoundaryBand) continue;
    const double r = inaccessibility(triangle, point);
    trace << " r=" << r << ";";
    if (std::abs(r - R) <= 1e-9) {
      best.theta = theta;
      best.R = R;
      best.height = height;
      best.point = point;
      return best;
    }
  }
  throw Error(ErrorCode::NoRootBracketed,
              "no validated root of the stationarity condition; scan:" + trace.str());
}

NotablePoints notable_points(double lambda) {
  require_positive(lambda, "lambda");
  const double in_radius = lambda / (lambda + std::sqrt(lambda * lambda + 1.0));
  return {{lambda, lambda * lambda},
          {lambda, in_radius},
          {lambda, 1.0 / 3.0},
          {lambda, 0.5 * (1.0 - lambda * lambda)}};
}

ConvexPolygon rectangle(double a, double b) {
  require_positive(a, "a");
  require_positive(b, "b");
  return ConvexPolygon::from_vertices({{0.0, 0.0}, {a, 0.0}, {a, b}, {0.0, b}});
}

RectangleSolution rectangle_solution(double a, double b) {
  require_positive(a, "a");
  require_positive(b, "b");
  if (a < b) throw Error(ErrorCode::InvalidArgument, "rectangle needs a >= b");
  RectangleSolution out;
  out.R = b;
  out.boundary_contact = a >= 2.0 * b;
  const Point2 center{0.5 * a, 0.5 * b};
  const std::array<Point2, 4> corners{{{0.0, 0.0}, {a, 0.0}, {a, b}, {0.0, b}}};
  for (std::size_t k = 0; k < 4; ++k) {
    const Point2 c = corners[k];
    const Point2 next = corners[(k + 1) % 4];
    const Point2 prev = corners[(k + 3) % 4];
    out.corner_bows[k] = full_bow_arc(sector_frame({c, next - c}, {c, prev - c}, center), b);
  }
  if (out.boundary_contact) {
    out.contact_segments.push_back({{b, 0.0}, {a - b, 0.0}});
    out.contact_segments.push_back({{a - b, b}, {b, b}});
  }
  return out;
}

bool RectangleSolution::in_region(Point2 p, double a, double b) const {
  if (p.x < 0.0 || p.x > a || p.y < 0.0 || p.y > b) return false;
  const double limit = std::cbrt(b * b);
  const std::array<Point2, 4> corners{{{0.0, 0.0}, {a, 0.0}, {a, b}, {0.0, b}}};
  for (const Point2& c : corners) {
    const double dx = std::abs(p.x - c.x);
    const double dy = std::abs(p.y - c.y);
    if (std::cbrt(dx * dx) + std::cbrt(dy * dy) < limit) return false;
  }
  return true;
}

EllipseSolution ellipse_solution(double a, double b) {
  require_positive(a, "a");
  require_positive(b, "b");
  if (a == b) throw Error(ErrorCode::DegenerateCircle, "a circle has a single maximizer");
  if (a < b) throw Error(ErrorCode::InvalidArgument, "ellipse needs a > b");
  EllipseSolution out;
  out.R = 2.0 * b;
  out.y0 = b * std::sqrt(a * a - b * b) / a;
  out.lower = {0.0, -out.y0};
  out.upper = {0.0, out.y0};
  return out;
}

double ellipse_chord_length(double a, double b, double y, double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  return 2.0 * std::sqrt((1.0 - y * y * c * c / (b * b)) * (a * a * c * c + b * b * s * s));
}

double ellipse_min_chord(double a, double b, double y) {
  return std::min(ellipse_chord_length(a, b, y, 0.5 * kPi), ellipse_chord_length(a, b, y, 0.0));
}

TrapezoidPair trapezoid_pair(double a, double epsilon) {
  if (!(std::isfinite(a) && a > 1.0) || !(epsilon > 0.0 && epsilon < 1.0)) {
    throw Error(ErrorCode::InvalidShape, "trapezoid needs a > 1 and 0 < epsilon < 1");
  }
  const double low = 1.0 - epsilon;
  // The prolonged long sides meet on the axis at x = a - height.
  const double height = 2.0 * a / epsilon;
  const double lambda = 1.0 / height;
  TrapezoidPair out{ConvexPolygon::from_vertices({{-a, -low}, {a, -1.0}, {a, 1.0}, {-a, low}}),
                    ConvexPolygon::from_vertices({{a, -low}, {a, low}, {-a, 1.0}, {-a, -1.0}}),
                    isosceles_solve(lambda),
                    0.0,
                    {},
                    {}};
  out.R = height * out.normalized.R;
  out.predicted = {a - height * out.normalized.height, 0.0};
  out.predicted_mirrored = {-out.predicted.x, 0.0};
  return out;
}

}  // namespace inaccess
