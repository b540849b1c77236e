#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "straightedge/brackets.hpp"
#include "straightedge/io.hpp"
#include "straightedge/oracle.hpp"
#include "straightedge/svg.hpp"

namespace py = pybind11;
using namespace straightedge;

namespace {

using Coordinates = std::array<std::string, 3>;

Point to_point(const Coordinates& c) {
  try {
    return Point(parse_rational(c[0]), parse_rational(c[1]), parse_rational(c[2]));
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

Line to_line(const Coordinates& c) { return Line(to_point(c).coords()); }

std::vector<Point> to_points(const std::vector<Coordinates>& cs) {
  std::vector<Point> out;
  for (const auto& c : cs) out.push_back(to_point(c));
  return out;
}

template <class T>
Coordinates coordinates(const T& v) {
  T c = canonicalize(v);
  return {to_string(c[0]), to_string(c[1]), to_string(c[2])};
}

std::vector<Coordinates> from_points(const std::vector<Point>& pts) {
  std::vector<Coordinates> out;
  for (const auto& p : pts) out.push_back(coordinates(p));
  return out;
}

ConstructionTrace parse_trace(const std::string& text) {
  try {
    return trace_from_json(nlohmann::json::parse(text));
  } catch (const nlohmann::json::exception& e) {
    throw SchemaError(std::string("invalid trace JSON: ") + e.what());
  }
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact straightedge test for ten points on a plane cubic";

  auto geometry_error = py::register_exception<GeometryError>(m, "GeometryError", PyExc_RuntimeError);
  py::register_exception<ConstructionDegenerateError>(m, "ConstructionDegenerateError", geometry_error.ptr());
  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<BracketError>(m, "BracketError", PyExc_ValueError);
  py::register_exception<TowerError>(m, "TowerError", PyExc_ArithmeticError);

  m.def("canonical_point", [](const Coordinates& c) { return coordinates(to_point(c)); });
  m.def("parse_point", [](const std::string& s) { return coordinates(parse_point(s)); });
  m.def("join", [](const Coordinates& a, const Coordinates& b) { return coordinates(join(to_point(a), to_point(b))); });
  m.def("meet", [](const Coordinates& l, const Coordinates& n) {
    return coordinates(meet(to_line(l), to_line(n)));
  });
  m.def("bracket", [](const Coordinates& a, const Coordinates& b, const Coordinates& c) {
    return to_string(bracket(to_point(a), to_point(b), to_point(c)));
  });
  m.def("cross_ratio", [](const Coordinates& a, const Coordinates& b, const Coordinates& c, const Coordinates& d,
                          const Coordinates& o) {
    return to_string(cross_ratio(to_point(a), to_point(b), to_point(c), to_point(d), to_point(o)));
  });

  m.def("cubic_det", [](const std::vector<Coordinates>& pts) { return to_string(cubic_det(to_points(pts))); });
  m.def("example_points", [] { return from_points(example_points()); });
  m.def("generate_instance", [](bool on_cubic, std::uint64_t seed) {
    return from_points(generate_instance(on_cubic, seed));
  }, py::arg("on_cubic"), py::arg("seed"));

  m.def(
      "check_ten_on_cubic",
      [](const std::vector<Coordinates>& pts, std::size_t max_schemes, std::uint64_t seed) {
        CheckOptions o;
        o.max_schemes = max_schemes;
        o.auxiliary.seed = seed;
        CheckResult r = check_ten_on_cubic(to_points(pts), o);
        py::dict out;
        out["verdict"] = to_string(r.verdict.kind);
        out["reason"] = r.verdict.reason;
        out["schemes_tried"] = r.schemes_tried;
        out["used_fallback"] = r.used_fallback;
        out["log"] = r.log;
        out["trace"] = r.trace ? py::object(py::str(trace_to_json(*r.trace).dump())) : py::object(py::none());
        return out;
      },
      py::arg("points"), py::arg("max_schemes") = 64, py::arg("seed") = 0);

  m.def("verify_certificate", [](const std::string& trace_json) {
    CertificateReport rep = verify_certificate(parse_trace(trace_json));
    py::dict out;
    out["reduction"] = equation_string(rep.reduction.relation);
    out["reduces_to_conclusion"] = rep.reduces_to_conclusion;
    out["passed"] = rep.passed();
    out["total"] = rep.checks.size();
    std::vector<std::string> failed;
    for (const auto& [rel, ok] : rep.checks)
      if (!ok) failed.push_back(to_string(rel));
    out["failed"] = failed;
    out["conclusion_holds"] = rep.conclusion_holds;
    out["conclusive"] = rep.conclusive();
    return out;
  });

  m.def("render_svg", [](const std::string& trace_json) { return render_svg(parse_trace(trace_json)); });
}
