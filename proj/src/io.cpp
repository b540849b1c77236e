#include "straightedge/io.hpp"

#include <fstream>
#include <sstream>

namespace straightedge {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

Triple<Rational> parse_triple(const std::string& text) {
  std::string body = text;
  auto first = body.find_first_not_of(" \t");
  auto last = body.find_last_not_of(" \t");
  if (first == std::string::npos || body[first] != '[' || body[last] != ']')
    throw SchemaError("expected '[a : b : c]', got '" + text + "'");
  body = body.substr(first + 1, last - first - 1);
  char sep = body.find(':') != std::string::npos ? ':' : ',';
  std::vector<std::string> parts;
  std::stringstream in(body);
  for (std::string item; std::getline(in, item, sep);) parts.push_back(item);
  if (parts.size() != 3) throw SchemaError("expected three coordinates in '" + text + "'");
  Triple<Rational> c;
  for (int i = 0; i < 3; ++i) {
    std::string s = parts[i];
    s.erase(0, s.find_first_not_of(" \t"));
    s.erase(s.find_last_not_of(" \t") + 1);
    try {
      c[i] = parse_rational(s);
    } catch (const std::invalid_argument& e) {
      throw SchemaError("coordinate " + std::to_string(i + 1) + " of '" + text + "': " + e.what());
    }
  }
  if (all_zero(c)) throw SchemaError("'" + text + "' is the zero triple");
  return c;
}

std::string where(const std::string& path, const std::string& what) { return path + ": " + what; }

const json& field(const json& obj, const std::string& name, const std::string& path) {
  if (!obj.is_object() || !obj.contains(name)) throw SchemaError(where(path, "missing field '" + name + "'"));
  return obj.at(name);
}

std::string string_at(const json& v, const std::string& path) {
  if (!v.is_string()) throw SchemaError(where(path, "expected a string"));
  return v.get<std::string>();
}

Point point_at(const json& v, const std::string& path) {
  try {
    return Point(parse_triple(string_at(v, path)));
  } catch (const SchemaError& e) {
    throw SchemaError(where(path, e.what()));
  }
}

Line line_at(const json& v, const std::string& path) {
  try {
    return Line(parse_triple(string_at(v, path)));
  } catch (const SchemaError& e) {
    throw SchemaError(where(path, e.what()));
  }
}

std::array<int, 5> indices_at(const json& v, const std::string& path) {
  if (!v.is_array() || v.size() != 5) throw SchemaError(where(path, "expected five indices"));
  std::array<int, 5> out{};
  for (std::size_t i = 0; i < 5; ++i) {
    if (!v[i].is_number_integer()) throw SchemaError(where(path, "expected integers"));
    out[i] = v[i].get<int>() - 1;
    if (out[i] < 0 || out[i] > 9) throw SchemaError(where(path, "index out of range 1..10"));
  }
  return out;
}

ordered_json indices_json(const std::array<int, 5>& s) {
  ordered_json a = ordered_json::array();
  for (int i : s) a.push_back(i + 1);
  return a;
}

ordered_json conic_json(const Conic& c) {
  ordered_json coeffs = ordered_json::array();
  for (const auto& k : c.coefficients()) coeffs.push_back(to_string(k));
  ordered_json through = ordered_json::array();
  for (const auto& p : c.defining_points()) through.push_back(to_string(p));
  return {{"equation", to_string(c)}, {"coefficients", coeffs}, {"through", through}};
}

Conic conic_at(const json& v, const std::string& path) {
  const json& coeffs = field(v, "coefficients", path);
  if (!coeffs.is_array() || coeffs.size() != 6) throw SchemaError(where(path + ".coefficients", "expected six"));
  Conic::Coefficients k;
  for (std::size_t i = 0; i < 6; ++i) {
    std::string at = path + ".coefficients[" + std::to_string(i) + "]";
    try {
      k[i] = parse_rational(string_at(coeffs[i], at));
    } catch (const std::invalid_argument& e) {
      throw SchemaError(where(at, e.what()));
    }
  }
  const json& through = field(v, "through", path);
  if (!through.is_array()) throw SchemaError(where(path + ".through", "expected an array"));
  std::vector<Point> pts;
  for (std::size_t i = 0; i < through.size(); ++i)
    pts.push_back(point_at(through[i], path + ".through[" + std::to_string(i) + "]"));
  try {
    return Conic(k, std::move(pts));
  } catch (const GeometryError& e) {
    throw SchemaError(where(path, e.what()));
  }
}

}  // namespace

Point parse_point(const std::string& text) { return Point(parse_triple(text)); }
Line parse_line(const std::string& text) { return Line(parse_triple(text)); }

std::vector<Point> parse_points(const std::string& document, std::size_t expected) {
  json doc;
  try {
    doc = json::parse(document);
  } catch (const json::parse_error& e) {
    throw SchemaError(std::string("invalid JSON: ") + e.what());
  }
  const json& arr = field(doc, "points", "document");
  if (!arr.is_array()) throw SchemaError("points: expected an array");
  if (expected != 0 && arr.size() != expected)
    throw InputError("points: expected " + std::to_string(expected) + " entries, found " +
                     std::to_string(arr.size()));
  std::vector<Point> out;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    std::string path = "points[" + std::to_string(i) + "]";
    const json& entry = arr[i];
    if (!entry.is_array() || entry.size() != 3) throw SchemaError(where(path, "expected three coordinates"));
    Triple<Rational> c;
    for (std::size_t j = 0; j < 3; ++j) {
      std::string at = path + "[" + std::to_string(j) + "]";
      try {
        c[j] = parse_rational(string_at(entry[j], at));
      } catch (const std::invalid_argument& e) {
        throw SchemaError(where(at, e.what()));
      }
    }
    if (all_zero(c)) throw SchemaError(where(path, "all coordinates are zero"));
    Point p = canonicalize(Point(c));
    for (std::size_t k = 0; k < out.size(); ++k)
      if (out[k] == p)
        throw InputError("points[" + std::to_string(k) + "] and " + path + " are the same point " + to_string(p));
    out.push_back(p);
  }
  return out;
}

std::vector<Point> read_points(const std::filesystem::path& path, std::size_t expected) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_points(buf.str(), expected);
}

ordered_json points_to_json(const std::vector<Point>& points) {
  ordered_json arr = ordered_json::array();
  for (const auto& p : points) {
    Point c = canonicalize(p);
    arr.push_back({to_string(c[0]), to_string(c[1]), to_string(c[2])});
  }
  return {{"points", arr}};
}

ordered_json trace_to_json(const ConstructionTrace& t) {
  ordered_json doc;
  ordered_json inputs = ordered_json::array();
  for (const auto& p : t.inputs) inputs.push_back(to_string(p));
  doc["inputs"] = inputs;
  doc["scheme"] = {{"s1", indices_json(t.scheme.s1)},
                   {"s2", indices_json(t.scheme.s2)},
                   {"t1", indices_json(t.scheme.t1)},
                   {"t2", indices_json(t.scheme.t2)}};
  doc["conics"] = {{"C1", conic_json(t.c1)}, {"C2", conic_json(t.c2)}, {"D1", conic_json(t.d1)},
                   {"D2", conic_json(t.d2)}};
  doc["points"] = {{"P1", to_string(t.p1)}, {"P2", to_string(t.p2)}, {"P", to_string(t.p)},
                   {"Q", to_string(t.q)},   {"R", to_string(t.r)},   {"G", to_string(t.g)},
                   {"W", to_string(t.w)},   {"X", to_string(t.x)},   {"Y", to_string(t.y)},
                   {"Z", to_string(t.z)},   {"U", to_string(t.u)},   {"V", to_string(t.v)}};
  doc["lines"] = {{"L_P", to_string(t.lp)}, {"L_Q", to_string(t.lq)}, {"L_R", to_string(t.lr)}};
  doc["collinearity"] = to_string(t.collinearity);
  doc["max_coordinate_bits"] = t.max_coordinate_bits;
  doc["log"] = t.log;
  return doc;
}

bool is_trace_document(const json& doc) { return doc.is_object() && doc.contains("inputs"); }

ConstructionTrace trace_from_json(const json& doc) {
  const json& inputs = field(doc, "inputs", "trace");
  if (!inputs.is_array()) throw SchemaError("inputs: expected an array");
  std::vector<Point> in;
  for (std::size_t i = 0; i < inputs.size(); ++i) in.push_back(point_at(inputs[i], "inputs[" + std::to_string(i) + "]"));

  const json& s = field(doc, "scheme", "trace");
  PartitionScheme scheme{indices_at(field(s, "s1", "scheme"), "scheme.s1"),
                         indices_at(field(s, "s2", "scheme"), "scheme.s2"),
                         indices_at(field(s, "t1", "scheme"), "scheme.t1"),
                         indices_at(field(s, "t2", "scheme"), "scheme.t2")};

  const json& conics = field(doc, "conics", "trace");
  const json& pts = field(doc, "points", "trace");
  const json& lines = field(doc, "lines", "trace");
  auto pt = [&](const char* name) { return point_at(field(pts, name, "points"), std::string("points.") + name); };
  auto ln = [&](const char* name) { return line_at(field(lines, name, "lines"), std::string("lines.") + name); };
  auto cn = [&](const char* name) { return conic_at(field(conics, name, "conics"), std::string("conics.") + name); };

  Rational coll;
  try {
    coll = parse_rational(string_at(field(doc, "collinearity", "trace"), "collinearity"));
  } catch (const std::invalid_argument& e) {
    throw SchemaError(where("collinearity", e.what()));
  }
  const json& bits = field(doc, "max_coordinate_bits", "trace");
  if (!bits.is_number_unsigned()) throw SchemaError("max_coordinate_bits: expected a non-negative integer");
  const json& log = field(doc, "log", "trace");
  if (!log.is_array()) throw SchemaError("log: expected an array");
  RetryLog entries;
  for (std::size_t i = 0; i < log.size(); ++i) entries.push_back(string_at(log[i], "log[" + std::to_string(i) + "]"));

  return ConstructionTrace{.inputs = std::move(in),
                           .scheme = scheme,
                           .c1 = cn("C1"),
                           .c2 = cn("C2"),
                           .d1 = cn("D1"),
                           .d2 = cn("D2"),
                           .p1 = pt("P1"),
                           .p2 = pt("P2"),
                           .lp = ln("L_P"),
                           .lq = ln("L_Q"),
                           .lr = ln("L_R"),
                           .p = pt("P"),
                           .q = pt("Q"),
                           .r = pt("R"),
                           .g = pt("G"),
                           .w = pt("W"),
                           .x = pt("X"),
                           .y = pt("Y"),
                           .z = pt("Z"),
                           .u = pt("U"),
                           .v = pt("V"),
                           .collinearity = coll,
                           .max_coordinate_bits = bits.get<std::size_t>(),
                           .log = std::move(entries)};
}

}  // namespace straightedge
