#include "inaccess/oracle.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "inaccess/error.hpp"

namespace inaccess {
namespace {

void check(const OracleConfig& config) {
  if (config.angle_samples < 2 || config.grid_resolution < 2 || config.refinement_levels < 2) {
    throw Error(ErrorCode::InvalidArgument, "oracle sample counts must be at least 2");
  }
}

template <typename D>
double sweep(const D& domain, Point2 p, const OracleConfig& config) {
  check(config);
  double best = std::numeric_limits<double>::infinity();
  const double n = static_cast<double>(config.angle_samples);
  for (std::size_t k = 0; k < config.angle_samples; ++k) {
    const DirectionAngle dir(std::numbers::pi * static_cast<double>(k) / n);
    best = std::min(best, chord_through(domain, p, dir).length);
  }
  return best;
}

}  // namespace

double oracle_r(const ConvexPolygon& domain, Point2 p, const OracleConfig& config) {
  require_interior(domain, p);
  return sweep(domain, p, config);
}

double oracle_r(const SimplePolygon& domain, Point2 p, const OracleConfig& config) {
  require_interior(domain, p);
  return sweep(domain, p, config);
}

double oracle_r(const SampledConvexDomain& domain, Point2 p, const OracleConfig& config) {
  return oracle_r(domain.polygon(), p, config);
}

double oracle_r(const Domain& domain, Point2 p, const OracleConfig& config) {
  return std::visit([&](const auto& d) { return oracle_r(d, p, config); }, domain);
}

OracleMax oracle_max(const ConvexPolygon& domain, const OracleConfig& config) {
  check(config);
  const std::size_t g = config.grid_resolution;
  Point2 lo = domain.bounds().min;
  Point2 hi = domain.bounds().max;
  OracleMax best{-1.0, domain.centroid()};
  for (std::size_t level = 0; level <= config.refinement_levels; ++level) {
    const double wx = hi.x - lo.x;
    const double wy = hi.y - lo.y;
    for (std::size_t i = 0; i < g; ++i) {
      for (std::size_t j = 0; j < g; ++j) {
        const Point2 q{lo.x + wx * (static_cast<double>(i) + 0.5) / static_cast<double>(g),
                       lo.y + wy * (static_cast<double>(j) + 0.5) / static_cast<double>(g)};
        if (domain.boundary_distance(q) < 2.0 * kBoundaryBand) continue;
        const double r = sweep(domain, q, config);
        if (r > best.R) best = {r, q};
      }
    }
    const Vec2 half{wx / 8.0, wy / 8.0};
    lo = best.point - half;
    hi = best.point + half;
  }
  return best;
}

OracleMax oracle_max(const SampledConvexDomain& domain, const OracleConfig& config) {
  return oracle_max(domain.polygon(), config);
}

}  // namespace inaccess
