#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "inaccess/domains.hpp"
#include "inaccess/levelsets.hpp"

namespace inaccess::io {

/// Parses a domain description:
///   {"kind": "polygon", "vertices": [[x, y], ...]}   convex, or simple as a fallback
///   {"kind": "sampled", "vertices": [[x, y], ...]}   dense convex boundary
///   {"kind": "ellipse", "a": A, "b": B, "sampleCount": N}
/// Malformed input raises ParseError naming the offending field; geometric
/// problems raise the validation error of the domain constructor.
Domain parse_domain(std::string_view json_text);
Domain load_domain(const std::filesystem::path& path);

/// Human-readable number with 9 significant digits.
std::string human(double value);
/// Shortest decimal that reads back to the same double.
std::string exact(double value);

/// CSV with header x,y,theta,label: theta is the ray angle from the anchor and
/// label names the arc holding the sample ("contour" when arcs are absent).
std::string contour_csv(const LevelSet& level);
/// Reads the x,y columns of a CSV produced by contour_csv.
std::vector<Point2> read_contour_csv(std::string_view csv);

/// Minimal SVG document in world coordinates (y up), fitted to a box with a 5% margin.
class Svg {
 public:
  explicit Svg(const BoundingBox& world, double width_px = 640.0);

  void polygon(std::span<const Point2> points, std::string_view style);
  void polyline(std::span<const Point2> points, std::string_view style);
  void path(std::span<const Point2> points, std::string_view style, bool closed = false);
  void segment(Point2 a, Point2 b, std::string_view style);
  void circle(Point2 center, double radius, std::string_view style);
  /// Axis-aligned squares of half side `half` around each center, as one path.
  void squares(std::span<const Point2> centers, double half, std::string_view style);
  void text(Point2 at, std::string_view content, double size);
  /// Starts a group; every element until end_group() shares the label.
  void begin_group(std::string_view id);
  void end_group();

  std::string str() const;
  void save(const std::filesystem::path& path) const;

 private:
  std::string coords(std::span<const Point2> points) const;

  BoundingBox view_;
  double width_px_;
  std::string body_;
};

void write_file(const std::filesystem::path& path, const std::string& content);

}  // namespace inaccess::io
