#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "inaccess/analytic.hpp"
#include "inaccess/bows.hpp"
#include "inaccess/cli.hpp"
#include "inaccess/error.hpp"
#include "inaccess/inaccessibility.hpp"
#include "inaccess/levelsets.hpp"
#include "inaccess/optimizer.hpp"
#include "inaccess/oracle.hpp"

namespace py = pybind11;
using namespace inaccess;

namespace {

std::vector<Point2> to_points(std::span<const Point2> pts) { return {pts.begin(), pts.end()}; }

// Accepts a ConvexPolygon or a SampledConvexDomain; the argument keeps the polygon alive.
const ConvexPolygon& convex_of(const py::object& d) {
  if (py::isinstance<SampledConvexDomain>(d)) return d.cast<const SampledConvexDomain&>().polygon();
  return d.cast<const ConvexPolygon&>();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Inaccessibility of planar convex domains";

  static py::exception<Error> error(m, "Error");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = py::reinterpret_borrow<py::object>(error.ptr())(e.what());
      exc.attr("code") = std::string(to_string(e.code()));
      exc.attr("indices") = e.indices();
      PyErr_SetObject(error.ptr(), exc.ptr());
    }
  });

  py::class_<Point2>(m, "Point2")
      .def(py::init<>())
      .def(py::init([](double x, double y) { return Point2{x, y}; }))
      .def(py::init([](py::sequence s) {
        if (py::len(s) != 2) throw py::value_error("a point needs two coordinates");
        return Point2{s[0].cast<double>(), s[1].cast<double>()};
      }))
      .def_readwrite("x", &Point2::x)
      .def_readwrite("y", &Point2::y)
      .def("__iter__", [](const Point2& p) { return py::iter(py::make_tuple(p.x, p.y)); })
      .def("__eq__", [](const Point2& a, const Point2& b) { return a == b; })
      .def("__repr__", [](const Point2& p) {
        std::ostringstream out;
        out.precision(17);
        out << "Point2(" << p.x << ", " << p.y << ")";
        return out.str();
      });
  py::implicitly_convertible<py::tuple, Point2>();
  py::implicitly_convertible<py::list, Point2>();

  py::class_<ConvexPolygon>(m, "ConvexPolygon")
      .def(py::init([](std::vector<Point2> v) { return ConvexPolygon::from_vertices(std::move(v)); }))
      .def_property_readonly("vertices", [](const ConvexPolygon& p) { return to_points(p.vertices()); })
      .def_property_readonly("area", &ConvexPolygon::area)
      .def_property_readonly("diameter", &ConvexPolygon::diameter)
      .def("contains", &ConvexPolygon::contains);

  py::class_<SampledConvexDomain>(m, "SampledConvexDomain")
      .def_static("ellipse", &SampledConvexDomain::ellipse, py::arg("a"), py::arg("b"),
                  py::arg("count") = kDefaultSampleCount)
      .def_static("semicircle", &SampledConvexDomain::semicircle, py::arg("radius"),
                  py::arg("count") = kDefaultSampleCount)
      .def_property_readonly("polygon", &SampledConvexDomain::polygon);

  py::class_<Chord>(m, "Chord")
      .def_readonly("a", &Chord::a)
      .def_readonly("b", &Chord::b)
      .def_readonly("length", &Chord::length)
      .def_readonly("edge_a", &Chord::edge_a)
      .def_readonly("edge_b", &Chord::edge_b)
      .def_property_readonly("direction", [](const Chord& c) { return c.direction.radians(); });

  py::class_<RResult>(m, "RResult")
      .def_readonly("r", &RResult::r)
      .def_readonly("minimizing_chord", &RResult::minimizing_chord)
      .def_readonly("active_pair", &RResult::active_pair)
      .def_readonly("minimizers", &RResult::minimizers);

  m.def("chord_through", [](const py::object& d, Point2 p, double theta) {
    return chord_through(convex_of(d), p, DirectionAngle(theta));
  });
  m.def("inaccessibility_at", [](const py::object& d, Point2 p) { return inaccessibility_at(convex_of(d), p); });
  m.def("inaccessibility", [](const py::object& d, Point2 p) { return inaccessibility(convex_of(d), p); });

  py::class_<MaxResult>(m, "MaxResult")
      .def_readonly("R", &MaxResult::R)
      .def_readonly("point", &MaxResult::point)
      .def_readonly("is_region", &MaxResult::is_region)
      .def_readonly("parallel_side_pairs", &MaxResult::parallel_side_pairs)
      .def_readonly("iterations", &MaxResult::iterations)
      .def_readonly("localization_diameter", &MaxResult::localization_diameter)
      .def_readonly("region_extent", &MaxResult::region_extent);
  m.def(
      "maximize",
      [](const py::object& d, double tol, std::size_t max_iterations) {
        MaxOptions opts;
        opts.tol = tol;
        opts.max_iterations = max_iterations;
        return maximize(convex_of(d), opts);
      },
      py::arg("domain"), py::arg("tol") = 1e-9, py::arg("max_iterations") = 10000);

  py::class_<LevelSet>(m, "LevelSet")
      .def_readonly("r", &LevelSet::r)
      .def_readonly("anchor", &LevelSet::anchor)
      .def_property_readonly("points", &LevelSet::points)
      .def_property_readonly("arc_labels", [](const LevelSet& ls) {
        std::vector<std::string> out;
        for (const ArcPiece& a : ls.arcs) out.push_back(a.label());
        return out;
      });
  m.def(
      "level_set",
      [](const py::object& d, double r, std::size_t rays, bool arcs) {
        ContourOptions opts;
        opts.rays = rays;
        LevelSet ls = contour(convex_of(d), r, opts);
        if (arcs) label_arcs(convex_of(d), ls);
        return ls;
      },
      py::arg("domain"), py::arg("r"), py::arg("rays") = 512, py::arg("arcs") = true);

  m.def("bow_point", &bow_point, py::arg("lambda_"), py::arg("r"), py::arg("theta"));

  py::class_<IsoscelesSolution>(m, "IsoscelesSolution")
      .def_readonly("lambda_", &IsoscelesSolution::lambda)
      .def_readonly("theta", &IsoscelesSolution::theta)
      .def_readonly("R", &IsoscelesSolution::R)
      .def_readonly("height", &IsoscelesSolution::height)
      .def_readonly("point", &IsoscelesSolution::point);
  m.def("isosceles_solve", &isosceles_solve, py::arg("lambda_"));
  m.def("isosceles_triangle", &isosceles_triangle, py::arg("lambda_"));

  py::class_<NotablePoints>(m, "NotablePoints")
      .def_readonly("H", &NotablePoints::H)
      .def_readonly("I", &NotablePoints::I)
      .def_readonly("G", &NotablePoints::G)
      .def_readonly("O", &NotablePoints::O);
  m.def("notable_points", &notable_points, py::arg("lambda_"));

  py::class_<EllipseSolution>(m, "EllipseSolution")
      .def_readonly("R", &EllipseSolution::R)
      .def_readonly("y0", &EllipseSolution::y0)
      .def_readonly("lower", &EllipseSolution::lower)
      .def_readonly("upper", &EllipseSolution::upper);
  m.def("ellipse_solution", &ellipse_solution, py::arg("a"), py::arg("b"));

  m.def(
      "rectangle_solution",
      [](double a, double b) {
        const RectangleSolution s = rectangle_solution(a, b);
        return py::dict(py::arg("R") = s.R, py::arg("boundary_contact") = s.boundary_contact);
      },
      py::arg("a"), py::arg("b"));

  m.def(
      "trapezoid_prediction",
      [](double a, double epsilon) {
        const TrapezoidPair t = trapezoid_pair(a, epsilon);
        return py::make_tuple(t.R, t.predicted, t.predicted_mirrored);
      },
      py::arg("a"), py::arg("epsilon"));

  m.def(
      "oracle_r",
      [](const py::object& d, Point2 p, std::size_t angles) {
        OracleConfig cfg;
        cfg.angle_samples = angles;
        return oracle_r(convex_of(d), p, cfg);
      },
      py::arg("domain"), py::arg("p"), py::arg("angle_samples") = 100000);

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"));
}
