#pragma once

// Deterministic SVG 1.1 output with zone-mask culling. One SVG user unit is
// one millimetre; paper y points up, so y is negated on output.

#include <charconv>
#include <string>
#include <vector>

#include "modcad/drawing.hpp"
#include "modcad/geometry.hpp"
#include "modcad/palette.hpp"

namespace modcad {

struct Viewport {
    Rect rect;

    void validate() const {
        if (!(rect.width() > 0.0) || !(rect.height() > 0.0)) throw GeometryError("viewport must have positive area");
    }
};

struct VisibleElement {
    std::size_t item = 0;
    std::size_t element = 0;  // index into module geometry; 0 for free elements

    friend bool operator==(const VisibleElement&, const VisibleElement&) = default;
};

// Elements whose bounds meet the viewport, in drawing order. With `cull`,
// modules whose zone mask misses the viewport's mask are skipped without
// looking at their elements. Modules reaching outside the zone grid are
// never skipped, since their mask does not cover them.
inline std::vector<VisibleElement> visible_elements(const Drawing& d, const Viewport& v, bool cull) {
    v.validate();
    const ZoneMask view_mask = compute_zone_mask(v.rect, d.zone_grid);
    const Rect grid_bounds = d.zone_grid.bounds();
    std::vector<VisibleElement> out;
    for (std::size_t i = 0; i < d.items.size(); ++i) {
        if (const auto* m = std::get_if<Module>(&d.items[i])) {
            if (cull && grid_bounds.contains(m->bbox) && !m->zone_mask.intersects(view_mask)) continue;
            for (std::size_t k = 0; k < m->geometry.size(); ++k) {
                if (element_bbox(m->geometry[k]).intersects(v.rect)) out.push_back({i, k});
            }
        } else if (element_bbox(std::get<Element>(d.items[i])).intersects(v.rect)) {
            out.push_back({i, 0});
        }
    }
    return out;
}

namespace svg {

inline std::string num(double v) {
    if (v == 0.0) v = 0.0;
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

inline std::string escape(std::string_view s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

inline constexpr double kStrokeWidth = 0.5;
inline constexpr double kThinStrokeWidth = 0.25;

inline std::string_view dash_pattern(LineType t) {
    switch (t) {
        case LineType::dashed: return "4,2";
        case LineType::dash_dot: return "8,2,1,2";
        default: return {};
    }
}

inline std::string stroke_attrs(const LineStyle& s) {
    std::string out = " fill=\"none\" stroke=\"" + std::string(kPalette[static_cast<std::size_t>(s.color)]) +
                      "\" stroke-width=\"" + num(s.line_type == LineType::thin_solid ? kThinStrokeWidth : kStrokeWidth) +
                      "\"";
    if (auto dash = dash_pattern(s.line_type); !dash.empty()) out += " stroke-dasharray=\"" + std::string(dash) + "\"";
    return out;
}

inline std::string xy(Point p) { return num(p.x) + "," + num(-p.y); }

inline void write_element(std::string& out, const Element& e) {
    std::visit(
        [&](const auto& s) {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, Segment>) {
                out += "<line x1=\"" + num(s.p1.x) + "\" y1=\"" + num(-s.p1.y) + "\" x2=\"" + num(s.p2.x) +
                       "\" y2=\"" + num(-s.p2.y) + "\"" + stroke_attrs(e.style) + "/>\n";
            } else if constexpr (std::is_same_v<T, Polyline>) {
                out += s.closed ? "<polygon points=\"" : "<polyline points=\"";
                for (std::size_t i = 0; i < s.points.size(); ++i) {
                    if (i) out += ' ';
                    out += xy(s.points[i]);
                }
                out += "\"" + stroke_attrs(e.style) + "/>\n";
            } else if constexpr (std::is_same_v<T, Arc>) {
                const Point a = s.start_point(), b = s.end_point();
                const char* large = s.sweep() > 180.0 ? "1" : "0";
                // Counter-clockwise on paper is clockwise once y is flipped.
                out += "<path d=\"M" + xy(a) + " A" + num(s.radius) + "," + num(s.radius) + " 0 " + large + ",0 " +
                       xy(b) + "\"" + stroke_attrs(e.style) + "/>\n";
            } else if constexpr (std::is_same_v<T, Circle>) {
                out += "<circle cx=\"" + num(s.center.x) + "\" cy=\"" + num(-s.center.y) + "\" r=\"" +
                       num(s.radius) + "\"" + stroke_attrs(e.style) + "/>\n";
            } else {
                out += "<text x=\"" + num(s.anchor.x) + "\" y=\"" + num(-s.anchor.y) + "\" font-size=\"" +
                       num(s.height) + "\" font-family=\"monospace\" fill=\"" +
                       std::string(kPalette[static_cast<std::size_t>(e.style.color)]) + "\"";
                if (s.angle_deg != 0.0)
                    out += " transform=\"rotate(" + num(-s.angle_deg) + " " + xy(s.anchor) + ")\"";
                out += ">" + escape(s.content) + "</text>\n";
            }
        },
        e.shape);
}

} // namespace svg

inline std::string render_svg(const Drawing& d, const Viewport& v, bool cull) {
    const auto visible = visible_elements(d, v, cull);
    const Rect& r = v.rect;
    std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + svg::num(r.width()) +
           "mm\" height=\"" + svg::num(r.height()) + "mm\" viewBox=\"" + svg::num(r.min.x) + " " +
           svg::num(-r.max.y) + " " + svg::num(r.width()) + " " + svg::num(r.height()) + "\">\n";
    for (const auto& ve : visible) {
        const Item& item = d.items[ve.item];
        if (const auto* m = std::get_if<Module>(&item)) svg::write_element(out, m->geometry[ve.element]);
        else svg::write_element(out, std::get<Element>(item));
    }
    out += "</svg>\n";
    return out;
}

} // namespace modcad
