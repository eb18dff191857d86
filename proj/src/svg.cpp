#include "lensgraph/svg.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>

namespace lensgraph {

namespace {

std::string num(double v) {
    if (v == 0.0) v = 0.0; // no "-0"
    return fmt::format("{:.9g}", v);
}

std::string xy(const Point& p) { return num(to_double(p.x)) + "," + num(-to_double(p.y)); }

std::string path_data(const std::vector<Point>& pts, bool closed) {
    std::string d;
    for (std::size_t i = 0; i < pts.size(); ++i) d += (i == 0 ? "M" : " L") + xy(pts[i]);
    if (closed) d += " Z";
    return d;
}

} // namespace

std::string render_svg(const Drawing& d, const SvgOptions& options) {
    double xmin = 0, xmax = 1, ymin = 0, ymax = 1;
    bool first = true;
    auto extend = [&](const Point& p) {
        const double x = to_double(p.x), y = -to_double(p.y);
        if (first) {
            xmin = xmax = x;
            ymin = ymax = y;
            first = false;
        }
        xmin = std::min(xmin, x);
        xmax = std::max(xmax, x);
        ymin = std::min(ymin, y);
        ymax = std::max(ymax, y);
    };
    for (const auto& p : d.vertices()) extend(p);
    for (const auto& e : d.edges()) {
        for (const auto& p : e.arc) extend(p);
    }
    const double span = std::max({xmax - xmin, ymax - ymin, 1e-9});
    const double margin = 0.08 * span;
    const double vw = (xmax - xmin) + 2 * margin;
    const double vh = (ymax - ymin) + 2 * margin;
    const double unit = span / 100.0;

    std::string out;
    out += fmt::format("<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{}\" height=\"{}\" viewBox=\"{} {} {} {}\">\n",
                       num(options.width_px), num(options.width_px * vh / vw), num(xmin - margin), num(ymin - margin),
                       num(vw), num(vh));
    out += fmt::format("<rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"white\"/>\n", num(xmin - margin),
                       num(ymin - margin), num(vw), num(vh));

    for (const auto& region : options.shaded_regions) {
        out += fmt::format("<path class=\"lens\" d=\"{}\" fill=\"#f4c542\" fill-opacity=\"0.35\" stroke=\"none\"/>\n",
                           path_data(region, true));
    }
    for (std::size_t i = 0; i < d.edge_count(); ++i) {
        out += fmt::format("<path class=\"arc\" data-edge=\"{}\" d=\"{}\" fill=\"none\" stroke=\"#1f4e79\" "
                           "stroke-width=\"{}\"/>\n",
                           i, path_data(d.edge(static_cast<EdgeId>(i)).arc, false), num(0.4 * unit));
    }
    for (const auto& p : options.highlighted_points) {
        out += fmt::format("<circle class=\"crossing\" cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"#c0392b\"/>\n",
                           num(to_double(p.x)), num(-to_double(p.y)), num(0.8 * unit));
    }
    for (std::size_t i = 0; i < d.vertex_count(); ++i) {
        const Point& p = d.vertex(static_cast<VertexId>(i));
        out += fmt::format("<circle class=\"vertex\" cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"black\"/>\n",
                           num(to_double(p.x)), num(-to_double(p.y)), num(1.2 * unit));
        if (options.vertex_labels) {
            out += fmt::format("<text x=\"{}\" y=\"{}\" font-size=\"{}\" font-family=\"sans-serif\">{}</text>\n",
                               num(to_double(p.x) + 1.5 * unit), num(-to_double(p.y) - 1.5 * unit), num(4 * unit),
                               i);
        }
    }
    out += "</svg>\n";
    return out;
}

} // namespace lensgraph
