#pragma once

// Point files and JSON traces.
//
// Point file:  {"points": [["p/q", "p/q", "p/q"], ...]}  with every coordinate a string.
//
// Trace document (all points and lines in canonical "[a : b : c]" form):
//   "inputs"        array of the ten input points, in input order
//   "scheme"        {"s1", "s2", "t1", "t2"}: arrays of 1-based input indices
//   "conics"        {"C1", "C2", "D1", "D2"}: each {"equation": text,
//                   "coefficients": six strings over x², xy, y², xz, yz, z², "through": five points}
//   "points"        {"P1", "P2", "P", "Q", "R", "G", "W", "X", "Y", "Z", "U", "V"}
//   "lines"         {"L_P", "L_Q", "L_R"}
//   "collinearity"  bracket [P2, U, V] on the canonical representatives, as a rational string
//   "max_coordinate_bits"  largest coordinate bit size met in the trace
//   "log"           array of retry messages

#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "straightedge/constructions.hpp"

namespace straightedge {

/// Malformed document; the message names the offending field.
class SchemaError : public InputError {
 public:
  using InputError::InputError;
};

/// Parses "[a : b : c]" (or "[a, b, c]") with rational entries.
Point parse_point(const std::string& text);
Line parse_line(const std::string& text);

/// Canonicalized points from a point document. `expected` = 0 accepts any count.
/// Throws SchemaError on malformed input and InputError on a wrong count or repeated points.
std::vector<Point> parse_points(const std::string& document, std::size_t expected = 10);
std::vector<Point> read_points(const std::filesystem::path& path, std::size_t expected = 10);

nlohmann::ordered_json points_to_json(const std::vector<Point>& points);

nlohmann::ordered_json trace_to_json(const ConstructionTrace& trace);
/// Inverse of trace_to_json. Throws SchemaError.
ConstructionTrace trace_from_json(const nlohmann::json& document);

/// Reads either a point document or a trace document (an object with "inputs").
bool is_trace_document(const nlohmann::json& document);

}  // namespace straightedge
