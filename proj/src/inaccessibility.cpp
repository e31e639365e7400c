#include "inaccess/inaccessibility.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "inaccess/error.hpp"

namespace inaccess {
namespace {

constexpr double kPi = std::numbers::pi;

// Vertex directions seen from an interior point increase monotonically
// (cyclically) with the vertex index, so the edge hit by a ray is found by
// binary search over the rotated angle sequence.
class EdgeLocator {
 public:
  EdgeLocator(const ConvexPolygon& domain, Point2 p) : n_(domain.size()), angles_(n_) {
    std::vector<double> raw(n_);
    for (std::size_t k = 0; k < n_; ++k) {
      const Vec2 d = domain.vertex(k) - p;
      raw[k] = std::atan2(d.y, d.x);
    }
    start_ = static_cast<std::size_t>(std::min_element(raw.begin(), raw.end()) - raw.begin());
    for (std::size_t i = 0; i < n_; ++i) {
      double a = raw[(start_ + i) % n_];
      if (i > 0 && a < angles_[i - 1]) a += 2.0 * kPi;
      angles_[i] = a;
    }
  }

  /// Edge whose angular span (from p) contains direction phi.
  std::size_t edge_at(double phi) const {
    const double a = lift(phi);
    const auto it = std::upper_bound(angles_.begin(), angles_.end(), a);
    const std::size_t i = it == angles_.begin() ? 0 : static_cast<std::size_t>(it - angles_.begin()) - 1;
    return (start_ + i) % n_;
  }

  /// edge_at for an increasing sequence of directions spanning less than
  /// 2*pi, in one linear pass.
  std::vector<std::size_t> edges_at(const std::vector<double>& phis) const {
    std::vector<std::size_t> out;
    out.reserve(phis.size());
    std::size_t i = 0;
    double prev = -std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < phis.size(); ++j) {
      const double a = lift(phis[j]);
      if (j == 0) {
        const auto it = std::upper_bound(angles_.begin(), angles_.end(), a);
        i = it == angles_.begin() ? 0 : static_cast<std::size_t>(it - angles_.begin()) - 1;
      } else if (a < prev) {
        i = 0;
      }
      while (i + 1 < n_ && angles_[i + 1] <= a) ++i;
      prev = a;
      out.push_back((start_ + i) % n_);
    }
    return out;
  }

  /// Vertex directions reduced to [0, pi), sorted and deduplicated. Reducing
  /// the increasing angle sequence mod pi leaves a few increasing runs, which
  /// are merged in linear time.
  std::vector<double> breakpoints() const {
    std::vector<double> out;
    out.reserve(n_);
    std::vector<std::size_t> run_starts{0};
    for (std::size_t i = 0; i < n_; ++i) {
      double a = angles_[i];
      while (a >= kPi) a -= kPi;
      while (a < 0.0) a += kPi;
      if (i > 0 && a < out.back()) run_starts.push_back(i);
      out.push_back(a);
    }
    for (std::size_t k = 1; k < run_starts.size(); ++k) {
      const std::size_t end = k + 1 < run_starts.size() ? run_starts[k + 1] : n_;
      std::inplace_merge(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(run_starts[k]),
                         out.begin() + static_cast<std::ptrdiff_t>(end));
    }
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

 private:
  // Representative of phi (mod 2*pi) in [angles_.front(), angles_.front() + 2*pi).
  double lift(double phi) const {
    const double base = angles_.front();
    double d = phi - base;
    while (d < 0.0) d += 2.0 * kPi;
    while (d >= 2.0 * kPi) d -= 2.0 * kPi;
    return base + d;
  }

  std::size_t n_;
  std::size_t start_ = 0;
  std::vector<double> angles_;
};

// Chord length between a fixed forward edge and backward edge as a function of
// the direction angle.
struct EdgePairLength {
  double h_fwd, h_bwd;
  Vec2 n_fwd, n_bwd;

  double value(Vec2 u) const { return h_fwd / dot(u, n_fwd) - h_bwd / dot(u, n_bwd); }
  double derivative(Vec2 u) const {
    const Vec2 du = perp(u);
    const double cf = dot(u, n_fwd);
    const double cb = -dot(u, n_bwd);
    return -h_fwd * dot(du, n_fwd) / (cf * cf) + h_bwd * dot(du, n_bwd) / (cb * cb);
  }
  double value(double theta) const { return value(unit_vector(theta)); }
  double derivative(double theta) const { return derivative(unit_vector(theta)); }
};

struct Candidate {
  double theta;
  double length;
  std::size_t fwd;
  std::size_t bwd;
};

double argmin_convex(const EdgePairLength& f, double lo, double hi) {
  if (f.derivative(lo) >= 0.0) return lo;
  if (f.derivative(hi) <= 0.0) return hi;
  for (int iter = 0; iter < 200; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (f.derivative(mid) > 0.0) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return 0.5 * (lo + hi);
}

Chord make_chord(const ConvexPolygon& domain, Point2 p, const Candidate& c) {
  double theta = c.theta;
  std::size_t fwd = c.fwd;
  std::size_t bwd = c.bwd;
  if (theta >= kPi) {
    theta -= kPi;
    std::swap(fwd, bwd);
  }
  const DirectionAngle dir(theta);
  const Vec2 u = unit_vector(theta);
  const double t_fwd = (domain.offset(fwd) - dot(p, domain.normal(fwd))) / dot(u, domain.normal(fwd));
  const double t_bwd = -(domain.offset(bwd) - dot(p, domain.normal(bwd))) / dot(u, domain.normal(bwd));
  Chord chord;
  chord.through = p;
  chord.direction = dir;
  chord.a = p - t_bwd * u;
  chord.b = p + t_fwd * u;
  chord.length = t_fwd + t_bwd;
  chord.edge_a = bwd;
  chord.edge_b = fwd;
  return chord;
}

}  // namespace

RResult inaccessibility_at(const ConvexPolygon& domain, Point2 p) {
  require_interior(domain, p);
  const EdgeLocator locator(domain, p);

  const std::vector<double> breaks = locator.breakpoints();

  const std::size_t m = breaks.size();
  std::vector<Vec2> units(m + 1);
  for (std::size_t i = 0; i < m; ++i) units[i] = unit_vector(breaks[i]);
  units[m] = -units[0];

  struct Piece {
    double lo, hi;
    std::size_t fwd, bwd;
  };
  std::vector<double> mids(m);
  for (std::size_t i = 0; i < m; ++i) {
    const double hi = i + 1 < m ? breaks[i + 1] : breaks[0] + kPi;
    mids[i] = 0.5 * (breaks[i] + hi);
  }
  const std::vector<std::size_t> fwd_edges = locator.edges_at(mids);
  for (double& mid : mids) mid += kPi;
  const std::vector<std::size_t> bwd_edges = locator.edges_at(mids);
  std::vector<Piece> pieces;
  pieces.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    const double hi = i + 1 < m ? breaks[i + 1] : breaks[0] + kPi;
    pieces.push_back({breaks[i], hi, fwd_edges[i], bwd_edges[i]});
  }

  auto length_on = [&](const Piece& piece) {
    return EdgePairLength{domain.offset(piece.fwd) - dot(p, domain.normal(piece.fwd)),
                          domain.offset(piece.bwd) - dot(p, domain.normal(piece.bwd)),
                          domain.normal(piece.fwd), domain.normal(piece.bwd)};
  };

  // Chord lengths at the breakpoints bound the minimum from above; a piece is
  // skipped when the tangents at its ends already keep it above that bound.
  double bound = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < m; ++i) bound = std::min(bound, length_on(pieces[i]).value(units[i]));

  std::vector<Candidate> candidates;
  for (std::size_t i = 0; i < m; ++i) {
    const Piece& piece = pieces[i];
    const EdgePairLength f = length_on(piece);
    const double f_lo = f.value(units[i]);
    const double f_hi = f.value(units[i + 1]);
    const double d_lo = f.derivative(units[i]);
    const double d_hi = f.derivative(units[i + 1]);
    double floor = std::min(f_lo, f_hi);
    if (d_lo < 0.0 && d_hi > 0.0) {
      const double x = (f_hi - f_lo + d_lo * piece.lo - d_hi * piece.hi) / (d_lo - d_hi);
      floor = f_lo + d_lo * (x - piece.lo);
    }
    if (floor > bound + 2.0 * kTieTolerance) continue;
    double theta = piece.lo;
    if (d_lo >= 0.0) {
      theta = piece.lo;
    } else if (d_hi <= 0.0) {
      theta = piece.hi;
    } else {
      theta = argmin_convex(f, piece.lo, piece.hi);
    }
    Candidate c{theta, f.value(theta), piece.fwd, piece.bwd};
    if (theta == piece.hi) {
      // A breakpoint chord belongs to the piece that starts there.
      const Piece& next = pieces[(i + 1) % m];
      c.fwd = next.fwd;
      c.bwd = next.bwd;
    }
    bound = std::min(bound, c.length);
    candidates.push_back(c);
  }

  double best = std::numeric_limits<double>::infinity();
  for (const Candidate& c : candidates) best = std::min(best, c.length);

  std::vector<Candidate> ties;
  for (const Candidate& c : candidates) {
    if (c.length <= best + kTieTolerance) ties.push_back(c);
  }
  auto normalized_angle = [](const Candidate& c) { return DirectionAngle(c.theta).radians(); };
  std::sort(ties.begin(), ties.end(), [&](const Candidate& a, const Candidate& b) {
    return normalized_angle(a) < normalized_angle(b);
  });
  std::vector<Candidate> unique_ties;
  for (const Candidate& c : ties) {
    if (!unique_ties.empty() &&
        normalized_angle(c) - normalized_angle(unique_ties.back()) < kTieTolerance) {
      if (c.length < unique_ties.back().length) unique_ties.back() = c;
      continue;
    }
    unique_ties.push_back(c);
  }
  if (unique_ties.size() > 1 &&
      normalized_angle(unique_ties.front()) + kPi - normalized_angle(unique_ties.back()) <
          kTieTolerance) {
    if (unique_ties.back().length < unique_ties.front().length) {
      unique_ties.front() = unique_ties.back();
    }
    unique_ties.pop_back();
  }

  RResult result;
  for (const Candidate& c : unique_ties) result.minimizers.push_back(make_chord(domain, p, c));
  std::sort(result.minimizers.begin(), result.minimizers.end(), [](const Chord& a, const Chord& b) {
    return a.direction.radians() < b.direction.radians();
  });
  result.minimizing_chord = result.minimizers.front();
  result.r = best;
  result.active_pair = {result.minimizing_chord.edge_a, result.minimizing_chord.edge_b};
  result.profile_breakpoints.reserve(m);
  for (double b : breaks) result.profile_breakpoints.emplace_back(b);
  return result;
}

RResult inaccessibility_at(const SampledConvexDomain& domain, Point2 p) {
  return inaccessibility_at(domain.polygon(), p);
}

RResult inaccessibility_at(const Domain& domain, Point2 p) {
  const ConvexPolygon* convex = as_convex(domain);
  if (convex == nullptr) {
    throw Error(ErrorCode::NotConvex,
                "exact inaccessibility needs a convex domain; use oracle_r for simple polygons");
  }
  return inaccessibility_at(*convex, p);
}

double inaccessibility(const ConvexPolygon& domain, Point2 p) {
  return inaccessibility_at(domain, p).r;
}

namespace {

template <typename D>
std::vector<ProfileSample> profile_impl(const D& domain, std::span<const Point2> vertices, Point2 p,
                                        std::size_t grid) {
  std::vector<double> angles;
  angles.reserve(vertices.size() + grid);
  for (const Point2& v : vertices) {
    const Vec2 d = v - p;
    angles.push_back(DirectionAngle(std::atan2(d.y, d.x)).radians());
  }
  for (std::size_t i = 0; i < grid; ++i) {
    angles.push_back(kPi * static_cast<double>(i) / static_cast<double>(grid));
  }
  std::sort(angles.begin(), angles.end());
  angles.erase(std::unique(angles.begin(), angles.end()), angles.end());
  std::vector<ProfileSample> out;
  out.reserve(angles.size());
  for (double a : angles) {
    const DirectionAngle dir(a);
    out.push_back({dir, chord_through(domain, p, dir).length});
  }
  return out;
}

}  // namespace

std::vector<ProfileSample> profile(const ConvexPolygon& domain, Point2 p, std::size_t grid) {
  require_interior(domain, p);
  return profile_impl(domain, domain.vertices(), p, grid);
}

std::vector<ProfileSample> profile(const Domain& domain, Point2 p, std::size_t grid) {
  if (const ConvexPolygon* convex = as_convex(domain)) return profile(*convex, p, grid);
  const auto& simple = std::get<SimplePolygon>(domain);
  require_interior(simple, p);
  return profile_impl(simple, simple.vertices(), p, grid);
}

}  // namespace inaccess
