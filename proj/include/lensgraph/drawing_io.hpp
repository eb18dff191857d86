#pragma once

#include "lensgraph/drawing.hpp"

#include <json.hpp>

#include <string>
#include <string_view>

namespace lensgraph {

/// Parses the JSON drawing schema:
///   {"vertices": [[x, y], ...],
///    "edges": [{"u": int, "v": int, "arc": [[x, y], ...]}, ...]}
/// where each coordinate is a JSON integer or a string "p" / "p/q".
/// Throws ParseError (syntax, types, malformed rationals) or SchemaError
/// (loops, mismatched arc ends, duplicate vertices).
Drawing load_drawing(std::string_view text);

/// Canonical text: one line for the vertex list, one line per edge.
std::string save_drawing(const Drawing& d);

Drawing load_drawing_file(const std::string& path);
void save_drawing_file(const Drawing& d, const std::string& path);

/// Exact JSON encodings shared by every report serializer.
nlohmann::json rational_to_json(const Rational& r);
nlohmann::json point_to_json(const Point& p);
nlohmann::json polyline_to_json(std::span<const Point> points);
nlohmann::json validation_to_json(const ValidationReport& report);

} // namespace lensgraph
