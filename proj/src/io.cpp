#include "inaccess/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <json.hpp>
#include <sstream>

#include "inaccess/error.hpp"

namespace inaccess::io {
namespace {

using nlohmann::json;

[[noreturn]] void parse_error(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

double number_field(const json& obj, const char* key) {
  const auto it = obj.find(key);
  if (it == obj.end()) parse_error(std::string("missing field '") + key + "'");
  if (!it->is_number()) parse_error(std::string("field '") + key + "' must be a number");
  return it->get<double>();
}

std::vector<Point2> vertex_list(const json& obj) {
  const auto it = obj.find("vertices");
  if (it == obj.end()) parse_error("missing field 'vertices'");
  if (!it->is_array()) parse_error("field 'vertices' must be an array");
  std::vector<Point2> out;
  out.reserve(it->size());
  for (std::size_t i = 0; i < it->size(); ++i) {
    const json& v = (*it)[i];
    if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
      parse_error("vertices[" + std::to_string(i) + "] must be a pair of numbers [x, y]");
    }
    out.push_back({v[0].get<double>(), v[1].get<double>()});
  }
  return out;
}

}  // namespace

Domain parse_domain(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text.begin(), json_text.end());
  } catch (const json::parse_error& e) {
    parse_error(std::string("invalid JSON at byte ") + std::to_string(e.byte) + ": " + e.what());
  }
  if (!doc.is_object()) parse_error("domain file must hold a JSON object");
  const auto kind_it = doc.find("kind");
  if (kind_it == doc.end() || !kind_it->is_string()) parse_error("missing string field 'kind'");
  const std::string kind = kind_it->get<std::string>();

  if (kind == "polygon") {
    std::vector<Point2> vertices = vertex_list(doc);
    try {
      return ConvexPolygon::from_vertices(vertices);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NotConvex) throw;
    }
    return SimplePolygon::from_vertices(std::move(vertices));
  }
  if (kind == "sampled") return SampledConvexDomain::from_boundary(vertex_list(doc));
  if (kind == "ellipse") {
    const double a = number_field(doc, "a");
    const double b = number_field(doc, "b");
    std::size_t count = kDefaultSampleCount;
    if (const auto it = doc.find("sampleCount"); it != doc.end()) {
      if (!it->is_number_unsigned()) parse_error("field 'sampleCount' must be a positive integer");
      count = it->get<std::size_t>();
    }
    return SampledConvexDomain::ellipse(a, b, count);
  }
  parse_error("unknown kind '" + kind + "' (expected polygon, sampled or ellipse)");
}

Domain load_domain(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) parse_error("cannot open " + path.string());
  const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  try {
    return parse_domain(text);
  } catch (const Error& e) {
    throw Error(e.code(), path.string() + ": " + e.what(), e.indices());
  }
}

std::string human(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9g", value);
  return buf;
}

std::string exact(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, res.ptr);
}

std::string contour_csv(const LevelSet& level) {
  const std::size_t m = level.contour.size();
  std::vector<std::string> labels(m, "contour");
  for (const ArcPiece& arc : level.arcs) {
    const std::string name = arc.label();
    for (std::size_t k = arc.first_sample;; k = (k + 1) % m) {
      labels[k] = name;
      if (k == arc.last_sample) break;
    }
  }
  std::string out = "x,y,theta,label\n";
  for (std::size_t k = 0; k < m; ++k) {
    const ContourSample& s = level.contour[k];
    out += exact(s.point.x) + "," + exact(s.point.y) + "," + exact(s.ray_angle) + "," + labels[k] + "\n";
  }
  return out;
}

std::vector<Point2> read_contour_csv(std::string_view csv) {
  std::vector<Point2> out;
  std::size_t pos = csv.find('\n');
  if (pos == std::string_view::npos) return out;
  ++pos;
  while (pos < csv.size()) {
    std::size_t end = csv.find('\n', pos);
    if (end == std::string_view::npos) end = csv.size();
    const std::string_view line = csv.substr(pos, end - pos);
    pos = end + 1;
    if (line.empty()) continue;
    Point2 p;
    const char* first = line.data();
    const char* last = line.data() + line.size();
    auto rx = std::from_chars(first, last, p.x);
    if (rx.ec != std::errc() || rx.ptr == last || *rx.ptr != ',') parse_error("bad x field in CSV row");
    auto ry = std::from_chars(rx.ptr + 1, last, p.y);
    if (ry.ec != std::errc()) parse_error("bad y field in CSV row");
    out.push_back(p);
  }
  return out;
}

Svg::Svg(const BoundingBox& world, double width_px) : width_px_(width_px) {
  const double margin = 0.05 * std::max(world.width(), world.height());
  view_ = {{world.min.x - margin, world.min.y - margin}, {world.max.x + margin, world.max.y + margin}};
}

std::string Svg::coords(std::span<const Point2> points) const {
  std::string out;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (i > 0) out += ' ';
    out += human(points[i].x) + "," + human(-points[i].y);
  }
  return out;
}

void Svg::polygon(std::span<const Point2> points, std::string_view style) {
  body_ += "<polygon points=\"" + coords(points) + "\" style=\"" + std::string(style) + "\"/>\n";
}

void Svg::polyline(std::span<const Point2> points, std::string_view style) {
  body_ += "<polyline points=\"" + coords(points) + "\" style=\"" + std::string(style) + "\"/>\n";
}

void Svg::path(std::span<const Point2> points, std::string_view style, bool closed) {
  std::string d;
  for (std::size_t i = 0; i < points.size(); ++i) {
    d += (i == 0 ? "M" : " L") + human(points[i].x) + "," + human(-points[i].y);
  }
  if (closed) d += " Z";
  body_ += "<path d=\"" + d + "\" style=\"" + std::string(style) + "\"/>\n";
}

void Svg::segment(Point2 a, Point2 b, std::string_view style) {
  body_ += "<line x1=\"" + human(a.x) + "\" y1=\"" + human(-a.y) + "\" x2=\"" + human(b.x) +
           "\" y2=\"" + human(-b.y) + "\" style=\"" + std::string(style) + "\"/>\n";
}

void Svg::circle(Point2 center, double radius, std::string_view style) {
  body_ += "<circle cx=\"" + human(center.x) + "\" cy=\"" + human(-center.y) + "\" r=\"" +
           human(radius) + "\" style=\"" + std::string(style) + "\"/>\n";
}

void Svg::squares(std::span<const Point2> centers, double half, std::string_view style) {
  std::string d;
  const std::string side = human(2.0 * half);
  for (const Point2& c : centers) {
    if (!d.empty()) d += ' ';
    d += "M" + human(c.x - half) + "," + human(-(c.y + half)) + " h" + side + " v" + side + " h-" + side + " Z";
  }
  body_ += "<path d=\"" + d + "\" style=\"" + std::string(style) + "\"/>\n";
}

void Svg::text(Point2 at, std::string_view content, double size) {
  std::string escaped;
  for (char c : content) {
    switch (c) {
      case '<': escaped += "&lt;"; break;
      case '>': escaped += "&gt;"; break;
      case '&': escaped += "&amp;"; break;
      default: escaped += c;
    }
  }
  body_ += "<text x=\"" + human(at.x) + "\" y=\"" + human(-at.y) + "\" font-size=\"" + human(size) +
           "\" font-family=\"sans-serif\">" + escaped + "</text>\n";
}

void Svg::begin_group(std::string_view id) { body_ += "<g id=\"" + std::string(id) + "\">\n"; }

void Svg::end_group() { body_ += "</g>\n"; }

std::string Svg::str() const {
  const double w = view_.width();
  const double h = view_.height();
  std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + human(width_px_) + "\" height=\"" +
         human(width_px_ * h / w) + "\" viewBox=\"" + human(view_.min.x) + " " + human(-view_.max.y) +
         " " + human(w) + " " + human(h) + "\">\n";
  out += body_;
  out += "</svg>\n";
  return out;
}

void Svg::save(const std::filesystem::path& path) const { write_file(path, str()); }

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write " + path.string());
  out << content;
}

}  // namespace inaccess::io
