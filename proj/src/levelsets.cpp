#include "inaccess/levelsets.hpp"

#include <algorithm>
#include <boost/math/tools/toms748_solve.hpp>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <sstream>

#include "inaccess/error.hpp"
#include "inaccess/inaccessibility.hpp"
#include "inaccess/optimizer.hpp"

namespace inaccess {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kCornerAngleTolerance = 1e-8;
constexpr double kArcFidelity = 1e-5;

class RayTracer {
 public:
  RayTracer(const ConvexPolygon& domain, Point2 anchor, double level, double tolerance)
      : domain_(domain),
        anchor_(anchor),
        level_(level),
        tolerance_(tolerance),
        f_anchor_(inaccessibility(domain, anchor) - level) {}

  /// Contour point on the ray at angle psi; `hint` is a guess for its distance.
  ContourSample at(double psi, std::optional<double> hint = std::nullopt) const {
    const Vec2 d = unit_vector(psi);
    double t_exit = std::numeric_limits<double>::infinity();
    std::size_t exit_edge = kNoEdge;
    for (std::size_t k = 0; k < domain_.size(); ++k) {
      const double dn = dot(d, domain_.normal(k));
      if (dn <= 0.0) continue;
      const double t = (domain_.offset(k) - dot(anchor_, domain_.normal(k))) / dn;
      if (t < t_exit) {
        t_exit = t;
        exit_edge = k;
      }
    }

    ContourSample sample;
    sample.ray_angle = psi;
    double t_near = t_exit - 1e-9 * domain_.diameter();
    if (t_near <= 0.0) t_near = 0.5 * t_exit;
    double f_near = 0.0;
    for (;;) {
      const Point2 q = anchor_ + t_near * d;
      if (domain_.boundary_distance(q) >= 2.0 * kBoundaryBand) {
        f_near = inaccessibility(domain_, q) - level_;
        break;
      }
      t_near -= 1e-9 * domain_.diameter();
    }
    if (f_near > 0.0) {
      sample.point = anchor_ + t_exit * d;
      sample.on_boundary = true;
      sample.boundary_edge = exit_edge;
      return sample;
    }
    if (f_near == 0.0) {
      sample.point = anchor_ + t_near * d;
      return sample;
    }
    auto f = [&](double t) { return inaccessibility(domain_, anchor_ + t * d) - level_; };
    double a = 0.0;
    double b = t_near;
    double fa = f_anchor_;
    double fb = f_near;
    if (hint && *hint > 0.0 && *hint < t_near) {
      // Neighbouring rays cross the level at nearby distances.
      const double lo_t = 0.98 * *hint;
      const double hi_t = std::min(1.02 * *hint, t_near);
      const double f_lo = f(lo_t);
      if (f_lo <= 0.0) {
        b = lo_t;
        fb = f_lo;
      } else {
        a = lo_t;
        fa = f_lo;
        const double f_hi = f(hi_t);
        if (f_hi <= 0.0) {
          b = hi_t;
          fb = f_hi;
        } else {
          a = hi_t;
          fa = f_hi;
        }
      }
      if (fb == 0.0) {
        sample.point = anchor_ + b * d;
        return sample;
      }
    }
    auto done = [&](double x, double y) { return std::abs(y - x) <= tolerance_; };
    std::uintmax_t iterations = 200;
    const auto [lo, hi] = boost::math::tools::toms748_solve(f, a, b, fa, fb, done, iterations);
    sample.point = anchor_ + 0.5 * (lo + hi) * d;
    return sample;
  }

 private:
  const ConvexPolygon& domain_;
  Point2 anchor_;
  double level_;
  double tolerance_;
  double f_anchor_;
};

struct Label {
  ArcKind kind = ArcKind::Bow;
  std::size_t a = kNoEdge;
  std::size_t b = kNoEdge;

  friend bool operator==(const Label&, const Label&) = default;
};

struct Probe {
  ContourSample sample;
  Label label;
  DirectionAngle direction;
};

Probe probe(const ConvexPolygon& domain, const ContourSample& sample) {
  Probe out{sample, {}, {}};
  if (sample.on_boundary) {
    out.label = {ArcKind::BoundarySegment, sample.boundary_edge, sample.boundary_edge};
    return out;
  }
  const Chord chord = inaccessibility_at(domain, sample.point).minimizing_chord;
  out.label = {ArcKind::Bow, std::min(chord.edge_a, chord.edge_b), std::max(chord.edge_a, chord.edge_b)};
  out.direction = chord.direction;
  return out;
}

[[noreturn]] void inconsistent(const std::string& what, std::vector<std::size_t> indices) {
  throw Error(ErrorCode::LabelingInconsistent, what, std::move(indices));
}

}  // namespace

std::string ArcPiece::label() const {
  std::ostringstream out;
  if (kind == ArcKind::Bow) {
    out << "bow(" << edge_pair.first << "," << edge_pair.second << ")";
  } else {
    out << "segment(" << edge << ")";
  }
  return out.str();
}

std::vector<Point2> LevelSet::points() const {
  std::vector<Point2> out;
  out.reserve(contour.size());
  for (const ContourSample& s : contour) out.push_back(s.point);
  return out;
}

LevelSet contour(const ConvexPolygon& domain, double level, const ContourOptions& options) {
  if (!std::isfinite(level) || level <= 0.0) {
    throw Error(ErrorCode::InvalidArgument, "level must be positive");
  }
  if (options.rays < 3) throw Error(ErrorCode::InvalidArgument, "need at least 3 rays");
  if (!(options.tolerance > 0.0)) throw Error(ErrorCode::InvalidArgument, "tolerance must be positive");

  Point2 anchor;
  if (options.anchor) {
    anchor = *options.anchor;
    if (domain.boundary_distance(anchor) < kBoundaryBand || inaccessibility(domain, anchor) <= level) {
      throw Error(ErrorCode::AnchorNotFound, "anchor is not strictly inside the superlevel set");
    }
  } else {
    const MaxResult best = maximize(domain);
    if (level >= best.R) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "level " << level << " is not below the maximum " << best.R;
      throw Error(ErrorCode::EmptyLevelSet, msg.str());
    }
    anchor = best.point;
  }

  LevelSet out;
  out.r = level;
  out.anchor = anchor;
  out.contour.reserve(options.rays);
  const RayTracer tracer(domain, anchor, level, options.tolerance);
  for (std::size_t k = 0; k < options.rays; ++k) {
    const double psi = 2.0 * kPi * static_cast<double>(k) / static_cast<double>(options.rays);
    std::optional<double> hint;
    if (!out.contour.empty() && !out.contour.back().on_boundary) {
      hint = distance(out.contour.back().point, anchor);
    }
    out.contour.push_back(tracer.at(psi, hint));
  }
  return out;
}

LevelSet contour(const SampledConvexDomain& domain, double level, const ContourOptions& options) {
  return contour(domain.polygon(), level, options);
}

void label_arcs(const ConvexPolygon& domain, LevelSet& level) {
  level.arcs.clear();
  const std::size_t m = level.contour.size();
  if (m == 0) return;
  std::vector<Probe> probes;
  probes.reserve(m);
  for (const ContourSample& s : level.contour) probes.push_back(probe(domain, s));

  std::size_t start = m;
  for (std::size_t k = 0; k < m; ++k) {
    if (!(probes[k].label == probes[(k + m - 1) % m].label)) {
      start = k;
      break;
    }
  }

  // Runs of equal labels, as [first, last] in cyclic index order.
  struct Run {
    std::size_t first, count;
    Probe head, tail;  // refined ends
  };
  std::vector<Run> runs;
  if (start == m) {
    runs.push_back({0, m, probes.front(), probes.back()});
  } else {
    std::size_t k = start;
    std::size_t covered = 0;
    while (covered < m) {
      Run run{k % m, 0, probes[k % m], probes[k % m]};
      while (covered < m && probes[k % m].label == probes[run.first].label) {
        run.tail = probes[k % m];
        ++run.count;
        ++covered;
        ++k;
      }
      runs.push_back(run);
    }
  }

  // Refine each change of label by bisection on the ray angle.
  const RayTracer tracer(domain, level.anchor, level.r, 1e-12 * (1.0 + domain.diameter()));
  const double step = 2.0 * kPi / static_cast<double>(m);
  if (runs.size() > 1) {
    for (std::size_t i = 0; i < runs.size(); ++i) {
      Run& cur = runs[i];
      Run& next = runs[(i + 1) % runs.size()];
      double lo = cur.tail.sample.ray_angle;
      double hi = lo + step;
      Probe lo_probe = cur.tail;
      Probe hi_probe = next.head;
      while (hi - lo > kCornerAngleTolerance) {
        const double mid = 0.5 * (lo + hi);
        const Probe p = probe(domain, tracer.at(mid));
        if (p.label == cur.tail.label) {
          lo = mid;
          lo_probe = p;
        } else {
          hi = mid;
          hi_probe = p;
        }
      }
      cur.tail = lo_probe;
      if (hi_probe.label == next.head.label) next.head = hi_probe;
    }
  }

  for (const Run& run : runs) {
    ArcPiece arc;
    arc.first_sample = run.first;
    arc.last_sample = (run.first + run.count - 1) % m;
    arc.start = run.head.sample.point;
    arc.end = run.tail.sample.point;
    const Label label = run.head.label;
    arc.kind = label.kind;
    if (label.kind == ArcKind::BoundarySegment) {
      arc.edge = label.a;
      level.arcs.push_back(arc);
      continue;
    }
    arc.edge_pair = {label.a, label.b};
    SectorFrame frame;
    try {
      frame = sector_frame(domain.edge_line(label.a), domain.edge_line(label.b), level.anchor);
    } catch (const Error&) {
      inconsistent("bow generated by parallel edges", {label.a, label.b});
    }
    BowArc bow = full_bow_arc(frame, level.r);
    const ThetaRange full = bow.theta_range;
    auto theta_of = [&](const Probe& p) {
      return std::clamp(bow_theta_for_direction(frame, p.direction.unit()), full.lo, full.hi);
    };
    double lo = theta_of(run.head);
    double hi = lo;
    for (std::size_t j = 0; j < run.count; ++j) {
      const double t = theta_of(probes[(run.first + j) % m]);
      lo = std::min(lo, t);
      hi = std::max(hi, t);
    }
    lo = std::min({lo, theta_of(run.tail)});
    hi = std::max({hi, theta_of(run.tail)});
    bow.theta_range = {lo, hi};
    for (std::size_t j = 0; j < run.count; ++j) {
      const std::size_t idx = (run.first + j) % m;
      const Point2 on_bow = bow_world(bow, theta_of(probes[idx]));
      if (distance(on_bow, probes[idx].sample.point) > kArcFidelity) {
        inconsistent("contour sample is off its bow", {idx, label.a, label.b});
      }
    }
    arc.bow = bow;
    level.arcs.push_back(arc);
  }
}

LevelSet level_set(const ConvexPolygon& domain, double level, const ContourOptions& options) {
  LevelSet out = contour(domain, level, options);
  label_arcs(domain, out);
  return out;
}

}  // namespace inaccess
