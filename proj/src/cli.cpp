#include "inaccess/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "inaccess/analytic.hpp"
#include "inaccess/error.hpp"
#include "inaccess/inaccessibility.hpp"
#include "inaccess/io.hpp"
#include "inaccess/levelsets.hpp"
#include "inaccess/optimizer.hpp"
#include "inaccess/oracle.hpp"

namespace inaccess {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr const char* kLine = "fill:none;stroke:black;vector-effect:non-scaling-stroke;stroke-width:1.5";
constexpr const char* kThin = "fill:none;stroke:#888888;vector-effect:non-scaling-stroke;stroke-width:0.75";

using io::human;

std::string point_text(Point2 p) { return "(" + human(p.x) + ", " + human(p.y) + ")"; }

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonFiniteCoordinate:
    case ErrorCode::TooFewVertices:
    case ErrorCode::NotConvex:
    case ErrorCode::SelfIntersecting:
    case ErrorCode::DegenerateEdge:
    case ErrorCode::ParseError:
    case ErrorCode::InvalidShape:
    case ErrorCode::DegenerateCircle:
      return kExitInvalidDomain;
    case ErrorCode::NotConverged:
    case ErrorCode::NoRootBracketed:
    case ErrorCode::LabelingInconsistent:
      return kExitNotConverged;
    default:
      return kExitUsage;
  }
}

Point2 parse_point(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw Error(ErrorCode::InvalidArgument, "point must be X,Y");
  try {
    std::size_t used_x = 0;
    std::size_t used_y = 0;
    const std::string xs = text.substr(0, comma);
    const std::string ys = text.substr(comma + 1);
    const Point2 p{std::stod(xs, &used_x), std::stod(ys, &used_y)};
    if (used_x != xs.size() || used_y != ys.size()) throw std::invalid_argument("trailing text");
    return p;
  } catch (const std::logic_error&) {
    throw Error(ErrorCode::InvalidArgument, "point must be X,Y, got '" + text + "'");
  }
}

std::vector<Point2> sample_arc(const ArcPiece& arc, std::size_t count = 48) {
  if (arc.kind == ArcKind::BoundarySegment || !arc.bow) return {arc.start, arc.end};
  std::vector<Point2> out;
  const ThetaRange range = arc.bow->theta_range;
  for (std::size_t i = 0; i <= count; ++i) {
    const double t = range.lo + (range.hi - range.lo) * static_cast<double>(i) / static_cast<double>(count);
    out.push_back(bow_world(*arc.bow, t));
  }
  return out;
}

void draw_level(io::Svg& svg, const LevelSet& level, std::string_view contour_style) {
  std::vector<Point2> closed = level.points();
  if (!closed.empty()) closed.push_back(closed.front());
  svg.polyline(closed, contour_style);
  for (const ArcPiece& arc : level.arcs) {
    svg.path(sample_arc(arc), arc.kind == ArcKind::Bow ? "fill:none;stroke:#c0392b;vector-effect:non-scaling-stroke;stroke-width:2"
                                                      : "fill:none;stroke:#2471a3;vector-effect:non-scaling-stroke;stroke-width:3");
  }
}

int cmd_eval(const std::string& file, const std::string& point, std::ostream& out) {
  const Domain domain = io::load_domain(file);
  const Point2 p = parse_point(point);
  if (const ConvexPolygon* convex = as_convex(domain)) {
    const RResult e = inaccessibility_at(*convex, p);
    out << "r = " << human(e.r) << "\n";
    out << "chord = " << point_text(e.minimizing_chord.a) << " -> " << point_text(e.minimizing_chord.b) << "\n";
    out << "direction = " << human(e.minimizing_chord.direction.radians()) << "\n";
    out << "active_pair = (" << e.active_pair.first << ", " << e.active_pair.second << ")\n";
    out << "minimizers = " << e.minimizers.size() << "\n";
    return kExitOk;
  }
  const OracleConfig config;
  out << "r = " << human(oracle_r(domain, p, config)) << "\n";
  out << "method = direction sweep (" << config.angle_samples << " directions, non-convex domain)\n";
  return kExitOk;
}

void print_max(const MaxResult& m, std::ostream& out) {
  out << "R = " << human(m.R) << "\n";
  out << "point = " << point_text(m.point) << "\n";
  out << "region = " << (m.is_region ? "true" : "false") << "\n";
  out << "parallel_side_pairs =";
  if (m.parallel_side_pairs.empty()) out << " none";
  for (const auto& [i, j] : m.parallel_side_pairs) out << " (" << i << ", " << j << ")";
  out << "\n";
  if (m.region_extent) {
    out << "region_extent = " << point_text(m.region_extent->first) << " to "
        << point_text(m.region_extent->second) << "\n";
  }
  out << "iterations = " << m.iterations << "\n";
  out << "localization_diameter = " << human(m.localization_diameter) << "\n";
  const char* term = m.termination == Termination::Converged           ? "converged"
                     : m.termination == Termination::ParallelSupports ? "parallel supports"
                                                                       : "optimality certificate";
  out << "termination = " << term << "\n";
}

int cmd_max(const std::string& file, double tol, std::ostream& out) {
  const Domain domain = io::load_domain(file);
  const ConvexPolygon* convex = as_convex(domain);
  if (convex == nullptr) throw Error(ErrorCode::NotConvex, "maximization needs a convex domain");
  MaxOptions options;
  options.tol = tol;
  print_max(maximize(*convex, options), out);
  return kExitOk;
}

int cmd_levelset(const std::string& file, double r, std::size_t rays, const std::string& format,
                 std::ostream& out) {
  const Domain domain = io::load_domain(file);
  const ConvexPolygon* convex = as_convex(domain);
  if (convex == nullptr) throw Error(ErrorCode::NotConvex, "level sets need a convex domain");
  const MaxResult best = maximize(*convex);
  if (!(r > 0.0) || r >= best.R) {
    throw Error(ErrorCode::InvalidArgument, "r must be in (0, R) with R = " + human(best.R));
  }
  ContourOptions options;
  options.rays = rays;
  options.anchor = best.point;
  LevelSet level = contour(*convex, r, options);
  if (std::holds_alternative<ConvexPolygon>(domain)) label_arcs(*convex, level);
  if (format == "csv") {
    out << io::contour_csv(level);
    return kExitOk;
  }
  io::Svg svg(convex->bounds());
  svg.polygon(convex->vertices(), kLine);
  draw_level(svg, level, kThin);
  out << svg.str();
  return kExitOk;
}

int cmd_isosceles(double lambda, std::ostream& out) {
  const IsoscelesSolution s = isosceles_solve(lambda);
  const NotablePoints n = notable_points(lambda);
  out << "lambda = " << human(lambda) << "\n";
  out << "theta = " << human(s.theta) << "\n";
  out << "R = " << human(s.R) << "\n";
  out << "I_D = " << point_text(s.point) << "\n";
  out << "roots = " << s.roots << "\n";
  out << "notable point heights (x = " << human(lambda) << "):\n";
  out << "  H    " << human(n.H.y) << "\n";
  out << "  I    " << human(n.I.y) << "\n";
  out << "  G    " << human(n.G.y) << "\n";
  out << "  O    " << human(n.O.y) << "\n";
  out << "  I_D  " << human(s.height) << "\n";
  return kExitOk;
}

int cmd_ellipse(double a, double b, std::ostream& out) {
  const EllipseSolution s = ellipse_solution(a, b);
  out << "R = " << human(s.R) << "\n";
  out << "E_R = " << point_text(s.lower) << " to " << point_text(s.upper) << "\n";
  return kExitOk;
}

// Figures.

SimplePolygon notched_ellipse(std::size_t count, double notch_width) {
  std::vector<Point2> v;
  const double a = 2.0;
  const double b = 1.0;
  const double half = 0.5 * notch_width;
  const double mouth = -a * std::sqrt(1.0 - half * half / (b * b));
  for (std::size_t k = 0; k < count; ++k) {
    const double t = 2.0 * kPi * static_cast<double>(k) / static_cast<double>(count);
    if (2 * k == count) {
      v.push_back({mouth, half});
      v.push_back({0.0, 0.0});
      v.push_back({mouth, -half});
      continue;
    }
    v.push_back({a * std::cos(t), b * std::sin(t)});
  }
  return SimplePolygon::from_vertices(std::move(v));
}

void figure_slit_ellipse(const std::filesystem::path& file) {
  const SimplePolygon domain = notched_ellipse(256, 1e-3);
  const std::size_t nx = 80;
  const std::size_t ny = 40;
  const double hx = 4.0 / static_cast<double>(nx);
  OracleConfig config;
  config.angle_samples = 360;
  std::vector<std::pair<Point2, double>> samples;
  for (std::size_t i = 0; i < nx; ++i) {
    for (std::size_t j = 0; j < ny; ++j) {
      const Point2 q{-2.0 + hx * (static_cast<double>(i) + 0.5), -1.0 + hx * (static_cast<double>(j) + 0.5)};
      if (!domain.contains(q) || domain.boundary_distance(q) < 1e-9) continue;
      samples.emplace_back(q, oracle_r(domain, q, config));
    }
  }
  io::Svg svg(domain.bounds());
  svg.text({-2.0, 1.1}, "qualitative: slit replaced by a notch of width 1e-3; cells with r > level", 0.08);
  const std::array<double, 4> levels{1.2, 1.4, 1.6, 1.8};
  const std::array<const char*, 4> fills{"fill:#d6eaf8", "fill:#85c1e9", "fill:#3498db", "fill:#1b4f72"};
  for (std::size_t l = 0; l < levels.size(); ++l) {
    std::vector<Point2> cells;
    for (const auto& [q, r] : samples) {
      if (r > levels[l]) cells.push_back(q);
    }
    svg.begin_group("level-" + human(levels[l]));
    svg.squares(cells, 0.5 * hx, fills[l]);
    svg.end_group();
  }
  svg.polygon(domain.vertices(), kLine);
  svg.save(file);
}

void figure_ellipse(const std::filesystem::path& file) {
  const SampledConvexDomain domain = SampledConvexDomain::ellipse(2.0, 1.0, 1024);
  const MaxResult best = maximize(domain);
  const EllipseSolution exact = ellipse_solution(2.0, 1.0);
  io::Svg svg(domain.polygon().bounds());
  svg.polygon(domain.polygon().vertices(), kLine);
  ContourOptions options;
  options.rays = 256;
  options.anchor = best.point;
  for (double level : {1.0, 1.5, 1.8, 1.95}) {
    const LevelSet set = contour(domain, level, options);
    std::vector<Point2> closed = set.points();
    closed.push_back(closed.front());
    svg.polyline(closed, kThin);
  }
  svg.segment(exact.lower, exact.upper, "stroke:#c0392b;vector-effect:non-scaling-stroke;stroke-width:3");
  svg.text({-2.0, 1.1}, "level sets r = 1, 1.5, 1.8, 1.95 and the maximizing segment", 0.08);
  svg.save(file);
}

void figure_bows(const std::filesystem::path& file) {
  const std::array<double, 3> lambdas{-1.0, 0.0, 1.0};
  const double spacing = 2.8;
  io::Svg svg({{-1.2, -0.2}, {2.0 * spacing + 1.2, 1.2}});
  for (std::size_t k = 0; k < lambdas.size(); ++k) {
    const double lambda = lambdas[k];
    const Vec2 shift{static_cast<double>(k) * spacing, 0.0};
    const SectorFrame frame = normal_sector_frame(lambda);
    const Vec2 side = unit_vector(frame.alpha);
    svg.begin_group("lambda-" + human(lambda));
    svg.segment(shift, shift + Vec2{1.2, 0.0}, kLine);
    svg.segment(shift, shift + 1.2 * side, kLine);
    const ThetaRange range = bow_theta_range(lambda);
    for (std::size_t i = 0; i <= 8; ++i) {
      const double t = range.lo + (range.hi - range.lo) * static_cast<double>(i) / 8.0;
      const auto [p, q] = bow_segment(lambda, 1.0, t);
      svg.segment(shift + p, shift + q, kThin);
    }
    std::vector<Point2> curve;
    for (std::size_t i = 0; i <= 96; ++i) {
      const double t = range.lo + (range.hi - range.lo) * static_cast<double>(i) / 96.0;
      curve.push_back(shift + bow_point(lambda, 1.0, t));
    }
    svg.path(curve, "fill:none;stroke:#c0392b;vector-effect:non-scaling-stroke;stroke-width:2");
    svg.text(shift + Vec2{0.1, -0.15}, "lambda = " + human(lambda), 0.1);
    svg.end_group();
  }
  svg.save(file);
}

void figure_rectangle(const std::filesystem::path& file) {
  const double a = 3.0;
  const double b = 1.0;
  const ConvexPolygon domain = rectangle(a, b);
  const MaxResult best = maximize(domain);
  ContourOptions options;
  options.anchor = best.point;
  const LevelSet level = level_set(domain, best.R - kRegionLevelOffset, options);
  const RectangleSolution exact = rectangle_solution(a, b);
  io::Svg svg(domain.bounds());
  svg.polygon(domain.vertices(), kLine);
  for (const BowArc& arc : exact.corner_bows) {
    std::vector<Point2> curve;
    for (std::size_t i = 0; i <= 64; ++i) {
      const double t = arc.theta_range.lo + (arc.theta_range.hi - arc.theta_range.lo) * static_cast<double>(i) / 64.0;
      curve.push_back(bow_world(arc, t));
    }
    svg.path(curve, "fill:none;stroke:#888888;stroke-dasharray:4 3;vector-effect:non-scaling-stroke;stroke-width:1");
  }
  draw_level(svg, level, kThin);
  svg.text({0.0, 1.1}, "maximizing region of the 3 x 1 rectangle: astroid arcs and boundary pieces", 0.08);
  svg.save(file);
}

std::string notable_csv() {
  std::vector<double> lambdas;
  for (int i = 20; i <= 300; ++i) lambdas.push_back(static_cast<double>(i) / 100.0);
  lambdas.push_back(1.0 / std::sqrt(3.0));
  std::sort(lambdas.begin(), lambdas.end());
  std::string out = "lambda,H,I,G,O,I2\n";
  for (double lambda : lambdas) {
    const NotablePoints n = notable_points(lambda);
    const IsoscelesSolution s = isosceles_solve(lambda);
    out += io::exact(lambda) + "," + io::exact(n.H.y) + "," + io::exact(n.I.y) + "," + io::exact(n.G.y) +
           "," + io::exact(n.O.y) + "," + io::exact(s.height) + "\n";
  }
  return out;
}

void figure_notable(const std::filesystem::path& svg_file, const std::filesystem::path& csv_file) {
  const std::string csv = notable_csv();
  io::write_file(csv_file, csv);

  std::array<std::vector<Point2>, 5> curves;
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  while (std::getline(in, line)) {
    std::array<double, 6> v{};
    std::istringstream row(line);
    std::string cell;
    for (double& x : v) {
      std::getline(row, cell, ',');
      x = std::stod(cell);
    }
    for (std::size_t c = 0; c < 5; ++c) curves[c].push_back({v[0], v[c + 1]});
  }
  io::Svg svg({{0.2, -1.0}, {3.0, 2.0}});
  svg.segment({0.2, 0.0}, {3.0, 0.0}, kThin);
  const std::array<const char*, 5> names{"H", "I", "G", "O", "I_D"};
  const std::array<const char*, 5> colors{"#1f77b4", "#2ca02c", "#9467bd", "#ff7f0e", "#d62728"};
  for (std::size_t c = 0; c < 5; ++c) {
    std::vector<Point2> visible;
    for (const Point2& p : curves[c]) {
      if (p.y >= -1.0 && p.y <= 2.0) visible.push_back(p);
    }
    svg.path(visible, std::string("fill:none;vector-effect:non-scaling-stroke;stroke-width:2;stroke:") + colors[c]);
    svg.text({2.6, 1.9 - 0.12 * static_cast<double>(c)}, names[c], 0.1);
  }
  svg.segment({1.0 / std::sqrt(3.0), -1.0}, {1.0 / std::sqrt(3.0), 2.0}, kThin);
  svg.text({0.25, 1.9}, "heights of H, I, G, O and I_D against lambda", 0.08);
  svg.save(svg_file);
}

}  // namespace

std::vector<std::string> write_figures(const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  figure_slit_ellipse(dir / "slit_ellipse.svg");
  figure_ellipse(dir / "ellipse.svg");
  figure_bows(dir / "bows.svg");
  figure_rectangle(dir / "rectangle.svg");
  figure_notable(dir / "notable_points.svg", dir / "notable_points.csv");
  return {"slit_ellipse.svg", "ellipse.svg", "bows.svg", "rectangle.svg", "notable_points.svg",
          "notable_points.csv"};
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Inaccessibility of planar convex domains"};
  app.name("inaccess");
  app.require_subcommand(1);

  std::string domain_file;
  std::string point;
  double r = 0.0;
  std::size_t rays = 512;
  std::string format = "svg";
  double tol = 1e-9;
  double lambda = 0.0;
  double a = 0.0;
  double b = 0.0;
  std::string out_dir;

  auto* eval = app.add_subcommand("eval", "r at a point, with its minimizing chord");
  eval->add_option("--domain", domain_file, "domain JSON file")->required();
  eval->add_option("--point", point, "query point X,Y")->required();

  auto* levelset = app.add_subcommand("levelset", "contour of {r >= level} as SVG or CSV");
  levelset->add_option("--domain", domain_file, "domain JSON file")->required();
  levelset->add_option("--r", r, "level in (0, R)")->required();
  levelset->add_option("--rays", rays, "number of rays")->check(CLI::Range(3, 1 << 20));
  levelset->add_option("--format", format, "svg or csv")->check(CLI::IsMember({"svg", "csv"}));

  auto* max = app.add_subcommand("max", "maximum of r and its location");
  max->add_option("--domain", domain_file, "domain JSON file")->required();
  max->add_option("--tol", tol, "localization diameter tolerance")->check(CLI::PositiveNumber);

  auto* iso = app.add_subcommand("isosceles", "closed-form solution for the isosceles triangle");
  iso->add_option("--lambda", lambda, "half base of the height-1 triangle")->required()->check(CLI::PositiveNumber);

  auto* ellipse = app.add_subcommand("ellipse", "closed-form maximizing segment of an ellipse");
  ellipse->add_option("--a", a, "semi-axis along x")->required();
  ellipse->add_option("--b", b, "semi-axis along y")->required();

  auto* figures = app.add_subcommand("figures", "write the SVG and CSV figure set");
  figures->add_option("--out", out_dir, "output directory")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n" << "run with --help for usage\n";
    return kExitUsage;
  }

  try {
    if (eval->parsed()) return cmd_eval(domain_file, point, out);
    if (levelset->parsed()) return cmd_levelset(domain_file, r, rays, format, out);
    if (max->parsed()) return cmd_max(domain_file, tol, out);
    if (iso->parsed()) return cmd_isosceles(lambda, out);
    if (ellipse->parsed()) return cmd_ellipse(a, b, out);
    if (figures->parsed()) {
      for (const std::string& name : write_figures(out_dir)) out << (std::filesystem::path(out_dir) / name).string() << "\n";
      return kExitOk;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace inaccess
