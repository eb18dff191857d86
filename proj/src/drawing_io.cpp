#include "lensgraph/drawing_io.hpp"

#include "lensgraph/errors.hpp"

#include <fstream>
#include <limits>
#include <sstream>

namespace lensgraph {

using nlohmann::json;

namespace {

std::size_t line_of(std::string_view text, std::size_t byte) {
    std::size_t line = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') ++line;
    }
    return line;
}

Rational coordinate(const json& j, const std::string& field) {
    if (j.is_number_integer()) {
        if (j.is_number_unsigned()) return Rational(Integer(std::to_string(j.get<std::uint64_t>())));
        return Rational(Integer(std::to_string(j.get<std::int64_t>())));
    }
    if (j.is_string()) {
        try {
            return parse_rational(j.get<std::string>());
        } catch (const ParseError& e) {
            throw ParseError(e.what(), 0, field);
        }
    }
    throw ParseError("coordinate must be an integer or a \"p/q\" string", 0, field);
}

Point point(const json& j, const std::string& field) {
    if (!j.is_array() || j.size() != 2) throw ParseError("point must be a two-element array", 0, field);
    return {coordinate(j[0], field + "[0]"), coordinate(j[1], field + "[1]")};
}

std::uint32_t index(const json& j, const std::string& field) {
    if (!j.is_number_integer() || j.get<std::int64_t>() < 0 ||
        j.get<std::int64_t>() > std::numeric_limits<std::uint32_t>::max()) {
        throw ParseError("expected a nonnegative integer", 0, field);
    }
    return static_cast<std::uint32_t>(j.get<std::int64_t>());
}

const json& member(const json& obj, const char* key, const std::string& field) {
    auto it = obj.find(key);
    if (it == obj.end()) throw ParseError(std::string("missing key \"") + key + "\"", 0, field);
    return *it;
}

} // namespace

json rational_to_json(const Rational& r) {
    if (r.get_den() == 1 && r.get_num().fits_slong_p()) return json(r.get_num().get_si());
    return json(to_string(r));
}

json point_to_json(const Point& p) { return json::array({rational_to_json(p.x), rational_to_json(p.y)}); }

json polyline_to_json(std::span<const Point> points) {
    json out = json::array();
    for (const auto& p : points) out.push_back(point_to_json(p));
    return out;
}

json validation_to_json(const ValidationReport& report) {
    json out = {{"ok", report.ok}, {"violations", json::array()}};
    for (const auto& v : report.violations) {
        json item = {{"kind", to_string(v.kind)}, {"edges", v.edges}};
        if (v.witness) item["witness"] = point_to_json(*v.witness);
        if (v.vertex) item["vertex"] = *v.vertex;
        out["violations"].push_back(std::move(item));
    }
    return out;
}

Drawing load_drawing(std::string_view text) {
    json root;
    try {
        root = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what(), line_of(text, e.byte == 0 ? 0 : e.byte - 1));
    }
    if (!root.is_object()) throw ParseError("top level must be an object", 1);

    const json& jv = member(root, "vertices", "");
    if (!jv.is_array()) throw ParseError("\"vertices\" must be an array", 0, "vertices");
    std::vector<Point> vertices;
    for (std::size_t i = 0; i < jv.size(); ++i) vertices.push_back(point(jv[i], "vertices[" + std::to_string(i) + "]"));

    const json& je = member(root, "edges", "");
    if (!je.is_array()) throw ParseError("\"edges\" must be an array", 0, "edges");
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < je.size(); ++i) {
        const std::string field = "edges[" + std::to_string(i) + "]";
        const json& obj = je[i];
        if (!obj.is_object()) throw ParseError("edge must be an object", 0, field);
        Edge e;
        e.u = index(member(obj, "u", field), field + ".u");
        e.v = index(member(obj, "v", field), field + ".v");
        const json& arc = member(obj, "arc", field);
        if (!arc.is_array()) throw ParseError("\"arc\" must be an array", 0, field + ".arc");
        for (std::size_t k = 0; k < arc.size(); ++k) {
            e.arc.push_back(point(arc[k], field + ".arc[" + std::to_string(k) + "]"));
        }
        edges.push_back(std::move(e));
    }
    return Drawing(std::move(vertices), std::move(edges));
}

std::string save_drawing(const Drawing& d) {
    std::ostringstream out;
    out << "{\n  \"vertices\": " << polyline_to_json(d.vertices()).dump() << ",\n  \"edges\": [";
    for (std::size_t i = 0; i < d.edge_count(); ++i) {
        const Edge& e = d.edge(static_cast<EdgeId>(i));
        json obj = {{"u", e.u}, {"v", e.v}, {"arc", polyline_to_json(e.arc)}};
        out << (i == 0 ? "\n    " : ",\n    ") << obj.dump();
    }
    out << (d.edge_count() == 0 ? "]\n}\n" : "\n  ]\n}\n");
    return out.str();
}

Drawing load_drawing_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_drawing(buf.str());
}

void save_drawing_file(const Drawing& d, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path);
    out << save_drawing(d);
}

} // namespace lensgraph
