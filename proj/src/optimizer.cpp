#include "inaccess/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "inaccess/error.hpp"
#include "inaccess/levelsets.hpp"

namespace inaccess {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kParallelTolerance = 1e-10;
constexpr std::size_t kStagnationLimit = 50;

// Whether the outward direction v belongs to the normal cone of the domain at
// x, a point on edge k (possibly one of its endpoints).
bool in_normal_cone(const ConvexPolygon& domain, Point2 x, std::size_t k, Vec2 v) {
  const std::size_t n = domain.size();
  const double snap = 1e-12 * (1.0 + domain.diameter());
  auto between = [&](Vec2 n1, Vec2 n2) {
    return cross(n1, v) >= -kParallelTolerance && cross(v, n2) >= -kParallelTolerance &&
           dot(v, n1 + n2) > 0.0;
  };
  if (distance(x, domain.vertex(k)) <= snap) return between(domain.normal((k + n - 1) % n), domain.normal(k));
  if (distance(x, domain.vertex(k + 1)) <= snap) return between(domain.normal(k), domain.normal((k + 1) % n));
  const Vec2 nk = domain.normal(k);
  return std::abs(cross(nk, v)) <= kParallelTolerance && dot(nk, v) > 0.0;
}

bool has_parallel_supports(const ConvexPolygon& domain, const Chord& chord) {
  const Vec2 u = normalized(chord.b - chord.a);
  return in_normal_cone(domain, chord.b, chord.edge_b, u) &&
         in_normal_cone(domain, chord.a, chord.edge_a, -u);
}

// Normals positively span the plane iff no angular gap between consecutive
// normals reaches pi.
bool positively_spanning(const std::vector<Cut>& cuts) {
  if (cuts.size() < 3) return false;
  std::vector<double> angles;
  angles.reserve(cuts.size());
  for (const Cut& c : cuts) angles.push_back(wrap_two_pi(std::atan2(c.normal.y, c.normal.x)));
  std::sort(angles.begin(), angles.end());
  double widest = angles.front() + 2.0 * kPi - angles.back();
  for (std::size_t i = 1; i < angles.size(); ++i) widest = std::max(widest, angles[i] - angles[i - 1]);
  return widest < kPi - 1e-9;
}

std::pair<std::size_t, std::size_t> sorted_pair(std::size_t a, std::size_t b) {
  return a < b ? std::pair{a, b} : std::pair{b, a};
}

}  // namespace

std::optional<Vec2> separating_normal(Vec2 support_a, Vec2 support_b, const Chord& chord) {
  if (std::abs(cross(support_a, support_b)) <= kParallelTolerance && dot(support_a, support_b) < 0.0) {
    return std::nullopt;
  }
  const Vec2 e1 = perp(support_a);
  const Vec2 e2 = perp(support_b);
  const Vec2 pq = chord.b - chord.a;
  Vec2 v = normalized(perp(pq));
  const double c1 = dot(e1, v);
  const double c2 = dot(e2, v);
  const Vec2 u = (c1 * e2 - c2 * e1) / (c1 * c2);
  if (dot(u, pq) > 0.0) v = -v;
  return v;
}

CutOutcome cut_at(const ConvexPolygon& domain, Point2 p) {
  const RResult eval = inaccessibility_at(domain, p);
  CutOutcome out;
  out.r = eval.r;
  for (const Chord& chord : eval.minimizers) {
    if (has_parallel_supports(domain, chord)) {
      out.parallel_pairs.push_back(sorted_pair(chord.edge_a, chord.edge_b));
    }
  }
  if (!out.parallel_pairs.empty()) {
    out.kind = CutKind::ParallelSupports;
    return out;
  }
  for (const Chord& chord : eval.minimizers) {
    const auto normal = separating_normal(domain.normal(chord.edge_a), domain.normal(chord.edge_b), chord);
    if (!normal) {
      // Parallel edge lines but a non-perpendicular chord cannot be minimal.
      throw Error(ErrorCode::ParallelLines, "minimizing chord joins parallel edges obliquely",
                  {chord.edge_a, chord.edge_b});
    }
    out.cuts.push_back({p, *normal, chord});
  }
  if (positively_spanning(out.cuts)) out.kind = CutKind::AmbiguousSide;
  return out;
}

int probe_side(const ConvexPolygon& domain, Point2 p, Vec2 normal, double delta) {
  const double plus = inaccessibility(domain, p + delta * normal);
  const double minus = inaccessibility(domain, p - delta * normal);
  if (plus > minus + 1e-12) return 1;
  if (minus > plus + 1e-12) return -1;
  return 0;
}

std::vector<std::pair<std::size_t, std::size_t>> parallel_side_pairs(const ConvexPolygon& domain,
                                                                      double width,
                                                                      double tolerance) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  const std::size_t n = domain.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vec2 ni = domain.normal(i);
      const Vec2 nj = domain.normal(j);
      if (std::abs(cross(ni, nj)) > kParallelTolerance || dot(ni, nj) >= 0.0) continue;
      if (std::abs(domain.offset(i) + domain.offset(j) - width) <= tolerance) pairs.emplace_back(i, j);
    }
  }
  return pairs;
}

namespace {

MaxResult finish_region(const ConvexPolygon& domain, Point2 p, double R, MaxResult result) {
  result.is_region = true;
  result.termination = Termination::ParallelSupports;
  result.R = R;
  result.point = p;
  result.parallel_side_pairs = parallel_side_pairs(domain, R);

  ContourOptions options;
  options.anchor = p;
  const LevelSet outline = contour(domain, R - kRegionLevelOffset, options);
  const std::vector<Point2> pts = outline.points();
  const Point2 center = area_centroid(pts);
  if (domain.boundary_distance(center) >= kBoundaryBand &&
      inaccessibility(domain, center) >= R - 1e-9) {
    result.point = center;
    result.R = std::max(R, inaccessibility(domain, center));
  }
  double best = -1.0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      const double d = distance(pts[i], pts[j]);
      if (d > best) {
        best = d;
        result.region_extent = std::pair{pts[i], pts[j]};
      }
    }
  }
  return result;
}

[[noreturn]] void stalled(const char* why, std::size_t iteration, double diam, double area) {
  std::ostringstream msg;
  msg.precision(6);
  msg << why << " after " << iteration << " iterations (localization diameter " << diam
      << ", area " << area << ")";
  throw Error(ErrorCode::NotConverged, msg.str());
}

}  // namespace

MaxResult maximize(const ConvexPolygon& domain, const MaxOptions& options) {
  std::vector<Point2> loc(domain.vertices().begin(), domain.vertices().end());
  MaxResult result;
  Point2 best_point = domain.centroid();
  double best_r = -1.0;
  std::size_t stagnant = 0;

  for (std::size_t it = 1;; ++it) {
    const double diam = diameter(loc);
    if (diam < options.tol) break;
    if (it > options.max_iterations) stalled("iteration limit reached", it - 1, diam, signed_area(loc));

    const Point2 p = area_centroid(loc);
    if (domain.boundary_distance(p) < kBoundaryBand) {
      stalled("localization set reached the boundary", it, diam, signed_area(loc));
    }
    const CutOutcome outcome = cut_at(domain, p);
    result.iterations = it;
    if (outcome.r > best_r) {
      best_r = outcome.r;
      best_point = p;
    }

    IterationRecord record;
    if (options.record_trace) {
      record.query = p;
      record.r = outcome.r;
      record.kind = outcome.kind;
      record.localization_before = loc;
      record.cuts = outcome.cuts;
      record.area_before = signed_area(loc);
    }

    if (outcome.kind == CutKind::ParallelSupports) {
      if (options.record_trace) result.trace.push_back(std::move(record));
      result.localization_diameter = diam;
      return finish_region(domain, p, outcome.r, std::move(result));
    }
    if (outcome.kind == CutKind::AmbiguousSide) {
      if (options.record_trace) result.trace.push_back(std::move(record));
      result.localization_diameter = diam;
      result.termination = Termination::OptimalityCertificate;
      result.R = outcome.r;
      result.point = p;
      return result;
    }

    const double area_before = signed_area(loc);
    for (const Cut& cut : outcome.cuts) loc = clip_halfplane(loc, cut.at, cut.normal);
    const double area_after = signed_area(loc);
    if (options.record_trace) {
      record.area_after = area_after;
      result.trace.push_back(std::move(record));
    }
    if (loc.empty()) stalled("localization set became empty", it, diam, 0.0);
    const bool shrank = area_after < area_before || diameter(loc) < diam;
    stagnant = shrank ? 0 : stagnant + 1;
    if (stagnant > kStagnationLimit) stalled("localization set stopped shrinking", it, diam, area_after);
  }

  result.localization_diameter = diameter(loc);
  result.termination = Termination::Converged;
  const Point2 center = area_centroid(loc);
  result.point = best_point;
  result.R = best_r;
  if (domain.boundary_distance(center) >= kBoundaryBand) {
    const double rc = inaccessibility(domain, center);
    if (rc >= best_r) {
      result.point = center;
      result.R = rc;
    }
  }
  return result;
}

MaxResult maximize(const SampledConvexDomain& domain, const MaxOptions& options) {
  return maximize(domain.polygon(), options);
}

}  // namespace inaccess
